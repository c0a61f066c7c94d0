use std::ops::{Add, Neg, Sub};

use super::field::{Element, Field};
use super::GfError;

/// A formal integer combination Σ c_i σ^{e_i} of powers of σ, acting on
/// nonzero elements as the exponent Σ c_i q^{s·e_i} modulo p^m − 1.
///
/// Powers are kept distinct and sorted; terms with a zero coefficient are
/// dropped. Powers are reduced modulo n only at evaluation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FrobExponent {
    terms: Vec<(i64, u64)>,
}

impl FrobExponent {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The plain exponent 1 = σ^0.
    pub fn one() -> Self {
        Self::sigma(0)
    }

    pub fn sigma(power: u64) -> Self {
        Self { terms: vec![(1, power)] }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, u64)>) -> Self {
        let mut e = Self::zero();
        for (c, pw) in terms {
            e.push(c, pw);
        }
        e
    }

    /// Σ_{i<count} σ^{start + i·step}.
    pub fn geometric(start: u64, step: u64, count: u64) -> Self {
        Self::from_terms((0..count).map(|i| (1, start + i * step)))
    }

    /// (σ^g − 1)/(σ − 1) = 1 + σ + … + σ^{g−1}.
    pub fn sigma_ratio(g: u64) -> Self {
        Self::geometric(0, 1, g)
    }

    pub fn push(&mut self, coeff: i64, power: u64) {
        if coeff == 0 {
            return;
        }
        match self.terms.binary_search_by_key(&power, |&(_, pw)| pw) {
            Ok(i) => {
                self.terms[i].0 += coeff;
                if self.terms[i].0 == 0 {
                    self.terms.remove(i);
                }
            }
            Err(i) => self.terms.insert(i, (coeff, power)),
        }
    }

    pub fn terms(&self) -> &[(i64, u64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiplies by σ^k (shifts every power).
    pub fn shifted(&self, k: u64) -> Self {
        Self::from_terms(self.terms.iter().map(|&(c, pw)| (c, pw + k)))
    }

    /// Formal product of two combinations.
    pub fn compose(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for &(c1, p1) in &self.terms {
            for &(c2, p2) in &other.terms {
                out.push(c1 * c2, p1 + p2);
            }
        }
        out
    }

    pub fn scaled(&self, k: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|&(c, pw)| (c * k, pw)))
    }

    /// True when every coefficient is nonnegative (a power realizable on 0).
    pub fn is_nonnegative(&self) -> bool {
        self.terms.iter().all(|&(c, _)| c >= 0)
    }
}

impl Add for FrobExponent {
    type Output = FrobExponent;
    fn add(mut self, rhs: FrobExponent) -> FrobExponent {
        for (c, pw) in rhs.terms {
            self.push(c, pw);
        }
        self
    }
}

impl Sub for FrobExponent {
    type Output = FrobExponent;
    fn sub(self, rhs: FrobExponent) -> FrobExponent {
        self + (-rhs)
    }
}

impl Neg for FrobExponent {
    type Output = FrobExponent;
    fn neg(self) -> FrobExponent {
        self.scaled(-1)
    }
}

/// a·b mod m without overflow for m < 2^127.
pub(crate) fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    if m <= 1 {
        return 0;
    }
    let (mut a, mut b) = (a % m, b % m);
    if let Some(v) = a.checked_mul(b) {
        return v % m;
    }
    let mut acc = 0u128;
    while b > 0 {
        if b & 1 == 1 {
            acc = (acc + a) % m;
        }
        a = (a << 1) % m;
        b >>= 1;
    }
    acc
}

pub(crate) fn mod_pow(base: u128, mut e: u128, m: u128) -> u128 {
    if m <= 1 {
        return 0;
    }
    let mut acc = 1u128;
    let mut b = base % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

impl Field {
    /// Σ c_i q^{s·e_i} reduced into [0, p^m − 1).
    pub fn exponent_eval(&self, e: &FrobExponent) -> u128 {
        let big_n = self.order() - 1;
        if big_n <= 1 {
            return 0;
        }
        let m = self.m() as u128;
        let hs = (self.h() * self.s()) as u128;
        let p = self.p() as u128;
        let mut acc = 0u128;
        for &(c, pw) in e.terms() {
            // q^{s·e} = p^{h·s·e} and p^m ≡ 1
            let r = (hs * (pw as u128 % self.n() as u128)) % m;
            let unit = p.pow(r as u32) % big_n;
            let cm = if c >= 0 {
                (c as u128) % big_n
            } else {
                (big_n - ((c.unsigned_abs() as u128) % big_n)) % big_n
            };
            acc = (acc + mul_mod(cm, unit, big_n)) % big_n;
        }
        acc
    }

    /// x^{E} where E = exponent_eval(e). Zero is accepted only when the
    /// exponent is a plain nonnegative combination.
    pub fn power_by_exponent(&self, x: Element, e: &FrobExponent) -> Result<Element, GfError> {
        if x.is_zero() {
            if e.is_zero() {
                return Ok(Element::ONE);
            }
            if e.is_nonnegative() {
                return Ok(Element::ZERO);
            }
            return Err(GfError::DivisionByZero);
        }
        Ok(self.pow(x, self.exponent_eval(e)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluation_examples() {
        let f = Field::new(2, 1, 7, 1).unwrap();
        assert_eq!(f.exponent_eval(&FrobExponent::one()), 1);
        let f1 = FrobExponent::geometric(0, 3, 3);
        assert_eq!(f.exponent_eval(&f1), 73);
        assert_eq!(f.exponent_eval(&f1.shifted(1)), 19);
        let wrap = FrobExponent::sigma(7) - FrobExponent::one();
        assert_eq!(f.exponent_eval(&wrap), 0);
        assert_eq!(f.exponent_eval(&-FrobExponent::one()), 126);
    }

    #[test]
    fn push_merges_and_cancels() {
        let e = FrobExponent::from_terms([(1, 2), (3, 0), (-1, 2)]);
        assert_eq!(e.terms(), &[(3, 0)]);
        let c = FrobExponent::sigma_ratio(2).compose(&FrobExponent::sigma_ratio(2));
        assert_eq!(c.terms(), &[(1, 0), (2, 1), (1, 2)]);
    }

    #[test]
    fn power_by_exponent_consistency() {
        let f = Field::new(2, 1, 7, 1).unwrap();
        for x in f.nonzero_elements() {
            assert_eq!(f.power_by_exponent(x, &FrobExponent::sigma(1)).unwrap(), f.sigma(x, 1));
            let sf1 = FrobExponent::geometric(1, 3, 3);
            assert_eq!(f.power_by_exponent(x, &sf1).unwrap(), f.pow(x, 19));
        }
        assert_eq!(f.power_by_exponent(Element::ONE, &-FrobExponent::sigma(3)).unwrap(), Element::ONE);
        assert_eq!(f.power_by_exponent(Element::ZERO, &FrobExponent::sigma(2)).unwrap(), Element::ZERO);
        assert_eq!(f.power_by_exponent(Element::ZERO, &FrobExponent::zero()).unwrap(), Element::ONE);
        assert!(f.power_by_exponent(Element::ZERO, &-FrobExponent::one()).is_err());
    }

    #[test]
    fn mul_mod_large() {
        let m = (1u128 << 126) - 1;
        let a = m - 2;
        // (m-2)^2 = 4 mod m
        assert_eq!(mul_mod(a, a, m), 4);
        assert_eq!(mod_pow(2, 126, m), 1);
    }
}
