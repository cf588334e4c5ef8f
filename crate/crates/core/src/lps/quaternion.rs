//! Integer quaternions of prime norm and the generator sets they induce.
//!
//! For a prime p ≡ 1 (mod 4) there are exactly p+1 integer quaternions
//! a + bi + cj + dk with a² + b² + c² + d² = p, a odd and positive, and
//! b, c, d even (one component of any representation of an odd number is
//! odd; normalizing it into the positive real slot picks one representative
//! per class). The set is closed under quaternion conjugation, so the
//! induced rotation generators come paired with their inverses.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntegerQuaternion {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl IntegerQuaternion {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self { a, b, c, d }
    }

    /// a² + b² + c² + d².
    pub fn norm(&self) -> i64 {
        self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d
    }

    /// Quaternion conjugate a − bi − cj − dk.
    pub fn conjugate(&self) -> Self {
        Self {
            a: self.a,
            b: -self.b,
            c: -self.c,
            d: -self.d,
        }
    }

    /// Hamilton product.
    pub fn mul(&self, o: &IntegerQuaternion) -> IntegerQuaternion {
        IntegerQuaternion {
            a: self.a * o.a - self.b * o.b - self.c * o.c - self.d * o.d,
            b: self.a * o.b + self.b * o.a + self.c * o.d - self.d * o.c,
            c: self.a * o.c - self.b * o.d + self.c * o.a + self.d * o.b,
            d: self.a * o.d + self.b * o.c - self.c * o.b + self.d * o.a,
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut f = 3u64;
    while f * f <= p {
        if p.is_multiple_of(f) {
            return false;
        }
        f += 2;
    }
    true
}

/// All norm-p integer quaternions with a > 0 odd and b, c, d even — exactly
/// p+1 of them, closed under conjugation. Requires p prime, p ≡ 1 (mod 4).
pub fn lps_quaternions(p: u64) -> Result<Vec<IntegerQuaternion>> {
    if !is_prime(p) {
        return Err(Error::UnsupportedParameter(format!("{p} is not prime")));
    }
    if p % 4 != 1 {
        return Err(Error::UnsupportedParameter(format!(
            "{p} ≡ {} (mod 4); the construction requires p ≡ 1 (mod 4)",
            p % 4
        )));
    }
    let p_i = p as i64;
    let half_bound = ((p as f64).sqrt() as i64 + 2) / 2;
    let mut out = Vec::new();
    let mut a = 1i64;
    while a * a <= p_i {
        let rest_a = p_i - a * a;
        for hb in -half_bound..=half_bound {
            let b = 2 * hb;
            let bb = b * b;
            if bb > rest_a {
                continue;
            }
            let rest_b = rest_a - bb;
            for hc in -half_bound..=half_bound {
                let c = 2 * hc;
                let cc = c * c;
                if cc > rest_b {
                    continue;
                }
                let rest_c = rest_b - cc;
                let d = (rest_c as f64).sqrt().round() as i64;
                if d * d == rest_c && d % 2 == 0 {
                    if d == 0 {
                        out.push(IntegerQuaternion::new(a, b, c, 0));
                    } else {
                        out.push(IntegerQuaternion::new(a, b, c, d));
                        out.push(IntegerQuaternion::new(a, b, c, -d));
                    }
                }
            }
        }
        a += 2;
    }
    out.sort();
    out.dedup();
    if out.len() != (p + 1) as usize {
        return Err(Error::ContractViolation(format!(
            "expected {} norm-{p} quaternions, found {}",
            p + 1,
            out.len()
        )));
    }
    Ok(out)
}
