//! Letters and freely reduced words over n generators and their inverses.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// A generator g_index or its inverse; indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: u32,
    pub sign: Sign,
}

impl Letter {
    pub fn gen(index: u32) -> Self {
        Letter {
            index,
            sign: Sign::Plus,
        }
    }

    pub fn inv(index: u32) -> Self {
        Letter {
            index,
            sign: Sign::Minus,
        }
    }

    pub fn inverse(self) -> Self {
        Letter {
            index: self.index,
            sign: self.sign.flipped(),
        }
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.index == other.index && self.sign != other.sign
    }

    pub fn in_range(self, n: u32) -> bool {
        1 <= self.index && self.index <= n
    }
}

/// A word with no adjacent (g, g⁻¹) pair. Only [`reduce_word`] constructs
/// nonempty values, so the invariant holds by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedWord {
    letters: Vec<Letter>,
}

impl ReducedWord {
    pub fn empty() -> Self {
        ReducedWord {
            letters: Vec::new(),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// True when the word is the group identity.
    pub fn is_identity(&self) -> bool {
        self.is_empty()
    }

    /// Validates the no-adjacent-inverse invariant (for tests).
    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| !w[0].cancels(w[1]))
    }
}

/// Cancels adjacent inverse pairs to a fixed point. A single left-to-right
/// stack pass reaches the fixed point, and free-group reduction is
/// confluent, so the result does not depend on cancellation order.
pub fn reduce_word(letters: &[Letter]) -> ReducedWord {
    let mut stack: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        match stack.last() {
            Some(&top) if top.cancels(l) => {
                stack.pop();
            }
            _ => stack.push(l),
        }
    }
    ReducedWord { letters: stack }
}

/// Validates that every letter's index lies in 1..=n.
pub fn check_alphabet(letters: &[Letter], n: u32) -> Result<()> {
    for (pos, l) in letters.iter().enumerate() {
        if !l.in_range(n) {
            return Err(Error::InvalidArgument(format!(
                "letter {pos} has index {} outside 1..={n}",
                l.index
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn single_cancellation() {
        let w = reduce_word(&[Letter::gen(1), Letter::inv(1)]);
        assert!(w.is_identity());
    }

    #[test]
    fn empty_word_reduces_to_empty() {
        assert!(reduce_word(&[]).is_identity());
    }

    #[test]
    fn interior_cancellation_cascades() {
        // g1 g2 g2^-1 g1 → g1 g1
        let w = reduce_word(&[
            Letter::gen(1),
            Letter::gen(2),
            Letter::inv(2),
            Letter::gen(1),
        ]);
        assert_eq!(w.letters(), &[Letter::gen(1), Letter::gen(1)]);
    }

    #[test]
    fn nested_cancellation_collapses_fully() {
        // g1 g2 g2^-1 g1^-1 → e
        let w = reduce_word(&[
            Letter::gen(1),
            Letter::gen(2),
            Letter::inv(2),
            Letter::inv(1),
        ]);
        assert!(w.is_identity());
    }

    /// Naive reducer: repeatedly remove the first adjacent inverse pair.
    /// Quadratic, but an order-independent oracle for the stack pass.
    fn reduce_naive(letters: &[Letter]) -> Vec<Letter> {
        let mut v: Vec<Letter> = letters.to_vec();
        loop {
            let mut cancelled = false;
            for i in 0..v.len().saturating_sub(1) {
                if v[i].cancels(v[i + 1]) {
                    v.drain(i..=i + 1);
                    cancelled = true;
                    break;
                }
            }
            if !cancelled {
                return v;
            }
        }
    }

    fn arb_letter(n: u32) -> impl Strategy<Value = Letter> {
        (1..=n, prop::bool::ANY).prop_map(
            |(i, plus)| {
                if plus {
                    Letter::gen(i)
                } else {
                    Letter::inv(i)
                }
            },
        )
    }

    proptest! {
        #[test]
        fn stack_and_naive_reducers_agree(letters in prop::collection::vec(arb_letter(3), 0..40)) {
            let fast = reduce_word(&letters);
            let slow = reduce_naive(&letters);
            prop_assert_eq!(fast.letters(), slow.as_slice());
            prop_assert!(fast.is_reduced());
        }

        #[test]
        fn word_times_inverse_reduces_to_identity(letters in prop::collection::vec(arb_letter(3), 0..30)) {
            let mut doubled = letters.clone();
            doubled.extend(letters.iter().rev().map(|l| l.inverse()));
            prop_assert!(reduce_word(&doubled).is_identity());
        }

        #[test]
        fn reduction_is_idempotent(letters in prop::collection::vec(arb_letter(2), 0..30)) {
            let once = reduce_word(&letters);
            let twice = reduce_word(once.letters());
            prop_assert_eq!(once, twice);
        }
    }
}
