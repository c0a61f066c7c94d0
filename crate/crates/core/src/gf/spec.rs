use serde::{Deserialize, Serialize};

use super::fp_poly;
use super::GfError;

/// Largest characteristic accepted; products of two residues must fit in a `u64`.
pub const MAX_CHARACTERISTIC: u64 = 1 << 31;

/// The tower F_p ⊂ F_q = F_{p^h} ⊂ F_{q^n}, together with the automorphism
/// parameter `s` (σ = x ↦ x^{q^s}) and the defining modulus of F_{p^m}, m = h·n.
///
/// The modulus is stored constant term first and is always monic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub h: usize,
    pub n: usize,
    pub s: usize,
    pub modulus: Vec<u64>,
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl FieldSpec {
    /// Builds the spec with the smallest monic irreducible modulus of degree
    /// m = h·n. Candidates are ranked by the integer Σ c_i p^i of their
    /// lower coefficients, i.e. the coefficient of the highest degree is
    /// the most significant.
    pub fn new(p: u64, h: usize, n: usize, s: usize) -> Result<Self, GfError> {
        validate_parameters(p, h, n, s)?;
        let m = h * n;
        let modulus = smallest_irreducible(p, m);
        Ok(Self { p, h, n, s, modulus })
    }

    /// Re-validates a deserialized record, including irreducibility.
    pub fn validate(&self) -> Result<(), GfError> {
        validate_parameters(self.p, self.h, self.n, self.s)?;
        let m = self.m();
        if self.modulus.len() != m + 1 || self.modulus[m] != 1 {
            return Err(GfError::BadModulus("modulus must be monic of degree h*n".into()));
        }
        if self.modulus.iter().any(|&c| c >= self.p) {
            return Err(GfError::BadModulus("coefficient out of range".into()));
        }
        if !fp_poly::is_irreducible(&self.modulus, self.p) {
            return Err(GfError::BadModulus("modulus is reducible".into()));
        }
        Ok(())
    }

    pub fn m(&self) -> usize {
        self.h * self.n
    }

    /// q = p^h.
    pub fn q(&self) -> u128 {
        (self.p as u128).pow(self.h as u32)
    }

    /// p^m, the field order.
    pub fn order(&self) -> u128 {
        (self.p as u128).pow(self.m() as u32)
    }

    pub fn is_modulus_irreducible(&self) -> bool {
        fp_poly::is_irreducible(&self.modulus, self.p)
    }
}

fn validate_parameters(p: u64, h: usize, n: usize, s: usize) -> Result<(), GfError> {
    if !fp_poly::is_prime(p) {
        return Err(GfError::NonPrimeP(p));
    }
    if h == 0 || n == 0 {
        return Err(GfError::InvalidParameter("h and n must be positive".into()));
    }
    if s == 0 || (n > 1 && s >= n) || (n == 1 && s != 1) {
        return Err(GfError::InvalidParameter(format!(
            "s = {s} must satisfy 1 <= s < n (or s = 1 when n = 1)"
        )));
    }
    if gcd(s, n) != 1 {
        return Err(GfError::GcdViolation { s, n });
    }
    if p >= MAX_CHARACTERISTIC {
        return Err(GfError::FieldTooLarge);
    }
    let m = h.checked_mul(n).ok_or(GfError::FieldTooLarge)?;
    let mut order: u128 = 1;
    for _ in 0..m {
        order = order.checked_mul(p as u128).ok_or(GfError::FieldTooLarge)?;
        if order > 1u128 << 126 {
            return Err(GfError::FieldTooLarge);
        }
    }
    Ok(())
}

fn smallest_irreducible(p: u64, m: usize) -> Vec<u64> {
    let mut low = vec![0u64; m];
    loop {
        let mut f = low.clone();
        f.push(1);
        if fp_poly::is_irreducible(&f, p) {
            return f;
        }
        // increment little-endian base-p counter
        let mut i = 0;
        loop {
            low[i] += 1;
            if low[i] < p {
                break;
            }
            low[i] = 0;
            i += 1;
            assert!(i < m, "no irreducible polynomial of degree {m} over F_{p}");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_cubic_over_f2() {
        let spec = FieldSpec::new(2, 1, 3, 1).unwrap();
        assert_eq!(spec.modulus, vec![1, 1, 0, 1]);
    }

    #[test]
    fn degree_one_modulus_is_x() {
        let spec = FieldSpec::new(2, 1, 1, 1).unwrap();
        assert_eq!(spec.modulus, vec![0, 1]);
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(FieldSpec::new(4, 1, 3, 1), Err(GfError::NonPrimeP(4))));
        assert!(matches!(FieldSpec::new(2, 1, 6, 2), Err(GfError::GcdViolation { .. })));
        assert!(matches!(FieldSpec::new(2, 1, 127, 1), Err(GfError::FieldTooLarge)));
        assert!(matches!(FieldSpec::new(3, 1, 80, 1), Err(GfError::FieldTooLarge)));
        assert!(FieldSpec::new(2, 1, 126, 1).is_ok());
    }

    #[test]
    fn validate_rejects_reducible_modulus() {
        let mut spec = FieldSpec::new(2, 1, 4, 1).unwrap();
        assert!(spec.validate().is_ok());
        spec.modulus = vec![1, 0, 1, 0, 1];
        assert!(spec.validate().is_err());
    }

    #[test]
    fn moduli_are_irreducible() {
        for (p, h, n) in [(2, 1, 8), (2, 2, 5), (3, 1, 7), (3, 2, 4), (5, 1, 6), (7, 1, 1)] {
            let spec = FieldSpec::new(p, h, n, 1).unwrap();
            assert!(spec.is_modulus_irreducible(), "{p} {h} {n}");
        }
    }
}
