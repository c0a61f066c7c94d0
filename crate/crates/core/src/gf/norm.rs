use super::field::{Element, Field};
use super::fp_poly::prime_factors;
use super::GfError;

/// Roots of x² + x + 1 in the field (one root in characteristic 3, two
/// when 3 divides p^m − 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeRoots {
    pub roots: Vec<Element>,
}

impl CubeRoots {
    pub fn first(&self) -> Element {
        self.roots[0]
    }
}

impl Field {
    /// N_{q^n/q^t}(x) = x^{(q^n−1)/(q^t−1)}; zero maps to zero.
    pub fn relative_norm(&self, x: Element, t: usize) -> Result<Element, GfError> {
        let n = self.n();
        if t == 0 || n % t != 0 {
            return Err(GfError::NonDivisor { t, n });
        }
        if x.is_zero() {
            return Ok(Element::ZERO);
        }
        Ok(self.pow(x, self.norm_exponent(t)))
    }

    /// N_{q^n/q}(x).
    pub fn norm(&self, x: Element) -> Element {
        self.relative_norm(x, 1).expect("1 divides n")
    }

    /// (q^n − 1)/(q^t − 1) = Σ_{i < n/t} q^{t·i}.
    pub fn norm_exponent(&self, t: usize) -> u128 {
        let qt = self.q().pow(t as u32);
        let mut acc = 0u128;
        let mut cur = 1u128;
        for _ in 0..self.n() / t {
            acc += cur;
            cur = cur.wrapping_mul(qt);
        }
        acc
    }

    /// Membership in F_{q^t}: fixed by x ↦ x^{q^t}.
    pub fn is_in_subfield(&self, x: Element, t: usize) -> bool {
        self.pow(x, self.q().pow(t as u32)) == x
    }

    /// Roots of x² + x + 1, smallest packed value first.
    pub fn find_cube_root_of_unity(&self) -> Result<CubeRoots, GfError> {
        if self.p() == 3 {
            return Ok(CubeRoots { roots: vec![Element::ONE] });
        }
        let big_n = self.order() - 1;
        if big_n % 3 != 0 {
            return Err(GfError::NoRoot);
        }
        // any y = x^{(p^m-1)/3} ≠ 1 has order 3
        let alpha = self
            .nonzero_elements()
            .map(|x| self.pow(x, big_n / 3))
            .find(|&y| y != Element::ONE)
            .ok_or(GfError::NoRoot)?;
        let mut roots = vec![alpha, self.mul(alpha, alpha)];
        roots.sort();
        Ok(CubeRoots { roots })
    }

    /// Smallest generator of the multiplicative group. Requires factoring
    /// p^m − 1, so only offered for fields below 2^64 elements.
    pub fn primitive_element(&self) -> Result<Element, GfError> {
        let big_n = self.order() - 1;
        if big_n > u64::MAX as u128 {
            return Err(GfError::FieldTooLarge);
        }
        if big_n == 1 {
            return Ok(Element::ONE);
        }
        let factors = prime_factors(big_n as u64);
        self.nonzero_elements()
            .find(|&g| factors.iter().all(|&r| self.pow(g, big_n / r as u128) != Element::ONE))
            .ok_or(GfError::FieldTooLarge)
    }
}
