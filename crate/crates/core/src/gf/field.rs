use std::fmt;

use serde::{Deserialize, Serialize};

use super::fp_poly;
use super::spec::FieldSpec;
use super::GfError;
use super::exponent::mod_pow;

/// Fields up to this many elements get log/antilog (and Zech) tables.
pub const TABLE_LIMIT: u128 = 1 << 22;

/// An element of F_{p^m}, packed as the integer Σ c_i p^i of its coordinates
/// in the basis 1, θ, …, θ^{m-1}.
///
/// For p = 2 the bits are the coefficients. The packing is also the
/// lexicographic enumeration index and the hex wire form.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Element(pub(crate) u128);

impl Element {
    pub const ZERO: Element = Element(0);
    pub const ONE: Element = Element(1);

    pub fn packed(self) -> u128 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn to_hex(self) -> String {
        format!("{:x}", self.0)
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0x{:x}", self.0)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

struct Tables {
    /// exp has length 2·(order-1) so that a sum of two logs needs no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    /// 1 + g^i = g^zech[i]; NONE when the sum is zero. Odd p only.
    zech: Option<Vec<u32>>,
    /// log(-1)
    log_minus_one: u32,
}

const NONE: u32 = u32::MAX;

/// Arithmetic context for F_{q^n}. Immutable after construction and `Sync`.
pub struct Field {
    spec: FieldSpec,
    m: usize,
    order: u128,
    /// p^i for i in 0..=m
    pow_p: Vec<u128>,
    /// modulus as a bitmask (p = 2 only)
    modulus_bits: u128,
    tables: Option<Tables>,
    /// sigma_basis[j][i] = σ^j(θ^i)
    sigma_basis: Vec<Vec<Element>>,
    /// q^{s·j} mod (order - 1), tabled path only
    sigma_exp: Vec<u64>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field").field("spec", &self.spec).finish()
    }
}

impl Field {
    pub fn new(p: u64, h: usize, n: usize, s: usize) -> Result<Self, GfError> {
        Self::from_spec(FieldSpec::new(p, h, n, s)?)
    }

    /// Builds the arithmetic context for an existing (e.g. deserialized) spec.
    pub fn from_spec(spec: FieldSpec) -> Result<Self, GfError> {
        spec.validate()?;
        let m = spec.m();
        let p = spec.p as u128;
        let pow_p: Vec<u128> = (0..=m).map(|i| p.pow(i as u32)).collect();
        let order = pow_p[m];
        let modulus_bits = if spec.p == 2 {
            spec.modulus
                .iter()
                .take(m)
                .enumerate()
                .fold(0u128, |acc, (i, &c)| acc | ((c as u128) << i))
        } else {
            0
        };
        let mut field = Field {
            spec,
            m,
            order,
            pow_p,
            modulus_bits,
            tables: None,
            sigma_basis: Vec::new(),
            sigma_exp: Vec::new(),
        };
        if order <= TABLE_LIMIT {
            field.tables = Some(field.build_tables());
        }
        field.sigma_basis = field.build_sigma_basis();
        if field.tables.is_some() {
            let big_n = order - 1;
            let q_s = mod_pow(field.spec.q(), field.spec.s as u128, big_n);
            let mut acc = 1 % big_n;
            field.sigma_exp = (0..field.spec.n)
                .map(|_| {
                    let cur = acc as u64;
                    acc = acc * q_s % big_n;
                    cur
                })
                .collect();
        }
        Ok(field)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn p(&self) -> u64 {
        self.spec.p
    }

    pub fn h(&self) -> usize {
        self.spec.h
    }

    pub fn n(&self) -> usize {
        self.spec.n
    }

    pub fn s(&self) -> usize {
        self.spec.s
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn q(&self) -> u128 {
        self.spec.q()
    }

    /// p^m
    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    /// log_g(x) for the table generator g; `None` for zero or untabled fields.
    pub fn discrete_log(&self, x: Element) -> Option<u64> {
        let t = self.tables.as_ref()?;
        if x.is_zero() {
            return None;
        }
        Some(t.log[x.0 as usize] as u64)
    }

    /// g^i for the table generator g; `None` for untabled fields.
    pub fn antilog(&self, i: u64) -> Option<Element> {
        let t = self.tables.as_ref()?;
        let big_n = (self.order - 1) as u64;
        Some(Element(t.exp[(i % big_n) as usize] as u128))
    }

    // ----- conversions -----

    pub fn element(&self, packed: u128) -> Result<Element, GfError> {
        if packed >= self.order {
            return Err(GfError::NotAnElement(packed));
        }
        Ok(Element(packed))
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<Element, GfError> {
        if coeffs.len() != self.m {
            return Err(GfError::WrongLength { expected: self.m, got: coeffs.len() });
        }
        let mut v = 0u128;
        for (i, &c) in coeffs.iter().enumerate() {
            if c >= self.spec.p {
                return Err(GfError::CoefficientOutOfRange(c));
            }
            v += c as u128 * self.pow_p[i];
        }
        Ok(Element(v))
    }

    pub fn coeffs(&self, x: Element) -> Vec<u64> {
        let mut out = vec![0u64; self.m];
        self.digits_into(x, &mut out);
        out
    }

    pub(crate) fn digits_into(&self, x: Element, out: &mut [u64]) {
        let p = self.spec.p as u128;
        let mut v = x.0;
        if self.spec.p == 2 {
            for (i, o) in out.iter_mut().enumerate() {
                *o = ((v >> i) & 1) as u64;
            }
            return;
        }
        for o in out.iter_mut() {
            *o = (v % p) as u64;
            v /= p;
        }
    }

    pub(crate) fn pack_digits(&self, d: &[u64]) -> Element {
        if self.spec.p == 2 {
            return Element(d.iter().enumerate().fold(0u128, |acc, (i, &c)| acc | ((c as u128) << i)));
        }
        Element(d.iter().rev().fold(0u128, |acc, &c| acc * self.spec.p as u128 + c as u128))
    }

    /// The image of an F_p scalar.
    pub fn scalar(&self, c: i64) -> Element {
        Element(c.rem_euclid(self.spec.p as i64) as u128)
    }

    /// θ^i for 0 ≤ i < m.
    pub fn basis(&self, i: usize) -> Element {
        Element(self.pow_p[i])
    }

    // ----- arithmetic -----

    pub fn add(&self, x: Element, y: Element) -> Element {
        if self.spec.p == 2 {
            return Element(x.0 ^ y.0);
        }
        if x.0 == 0 {
            return y;
        }
        if y.0 == 0 {
            return x;
        }
        if let Some(t) = &self.tables {
            let zech = t.zech.as_ref().expect("odd characteristic keeps a zech table");
            let big_n = self.order as u32 - 1;
            let lx = t.log[x.0 as usize];
            let ly = t.log[y.0 as usize];
            let diff = if ly >= lx { ly - lx } else { ly + big_n - lx };
            let z = zech[diff as usize];
            if z == NONE {
                return Element::ZERO;
            }
            return Element(t.exp[(lx + z) as usize] as u128);
        }
        self.digitwise(x, y, |a, b, p| (a + b) % p)
    }

    pub fn neg(&self, x: Element) -> Element {
        if self.spec.p == 2 || x.0 == 0 {
            return x;
        }
        if let Some(t) = &self.tables {
            return Element(t.exp[(t.log[x.0 as usize] + t.log_minus_one) as usize] as u128);
        }
        self.digitwise(Element::ZERO, x, |a, b, p| (a + p - b) % p)
    }

    pub fn sub(&self, x: Element, y: Element) -> Element {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: Element, y: Element) -> Element {
        if x.0 == 0 || y.0 == 0 {
            return Element::ZERO;
        }
        if let Some(t) = &self.tables {
            let l = t.log[x.0 as usize] + t.log[y.0 as usize];
            return Element(t.exp[l as usize] as u128);
        }
        self.slow_mul(x, y)
    }

    pub fn inv(&self, x: Element) -> Result<Element, GfError> {
        if x.0 == 0 {
            return Err(GfError::DivisionByZero);
        }
        if let Some(t) = &self.tables {
            let big_n = self.order as u32 - 1;
            let l = t.log[x.0 as usize];
            return Ok(Element(t.exp[((big_n - l) % big_n) as usize] as u128));
        }
        Ok(self.pow(x, self.order - 2))
    }

    pub fn div(&self, x: Element, y: Element) -> Result<Element, GfError> {
        Ok(self.mul(x, self.inv(y)?))
    }

    /// x^e with 0^0 = 1.
    pub fn pow(&self, x: Element, e: u128) -> Element {
        if e == 0 {
            return Element::ONE;
        }
        if x.0 == 0 {
            return Element::ZERO;
        }
        if let Some(t) = &self.tables {
            let big_n = (self.order - 1) as u64;
            let em = (e % big_n as u128) as u64;
            let l = (t.log[x.0 as usize] as u64 * em) % big_n;
            return Element(t.exp[l as usize] as u128);
        }
        let mut acc = Element::ONE;
        let mut base = x;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.slow_mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.slow_mul(base, base);
            }
        }
        acc
    }

    /// σ^j(x) = x^{q^{s·j}}, j taken modulo n.
    pub fn sigma(&self, x: Element, j: i64) -> Element {
        let jj = j.rem_euclid(self.spec.n as i64) as usize;
        if jj == 0 || x.0 <= 1 {
            return x;
        }
        if let Some(t) = &self.tables {
            let big_n = (self.order - 1) as u64;
            let l = (t.log[x.0 as usize] as u64 * self.sigma_exp[jj]) % big_n;
            return Element(t.exp[l as usize] as u128);
        }
        self.apply_linear(&self.sigma_basis[jj], x)
    }

    /// The images σ^j(θ^i), i in 0..m.
    pub(crate) fn sigma_basis_row(&self, j: usize) -> &[Element] {
        &self.sigma_basis[j % self.spec.n]
    }

    /// Σ c_i images[i] where c are the coordinates of x.
    pub(crate) fn apply_linear(&self, images: &[Element], x: Element) -> Element {
        if self.spec.p == 2 {
            let mut acc = 0u128;
            let mut v = x.0;
            let mut i = 0;
            while v != 0 {
                if v & 1 == 1 {
                    acc ^= images[i].0;
                }
                v >>= 1;
                i += 1;
            }
            return Element(acc);
        }
        let mut digits = vec![0u64; self.m];
        self.digits_into(x, &mut digits);
        let mut acc = vec![0u64; self.m];
        let mut tmp = vec![0u64; self.m];
        let p = self.spec.p;
        for (i, &c) in digits.iter().enumerate() {
            if c == 0 {
                continue;
            }
            self.digits_into(images[i], &mut tmp);
            for (a, &t) in acc.iter_mut().zip(tmp.iter()) {
                *a = ((*a as u128 + c as u128 * t as u128) % p as u128) as u64;
            }
        }
        self.pack_digits(&acc)
    }

    pub fn zero(&self) -> Element {
        Element::ZERO
    }

    pub fn one(&self) -> Element {
        Element::ONE
    }

    /// x ↦ x^q fixes exactly the subfield F_q.
    pub fn is_in_fq(&self, x: Element) -> bool {
        self.pow(x, self.q()) == x
    }

    /// All p^m elements in lexicographic (packed-integer) order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order).map(Element)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Element> + '_ {
        (1..self.order).map(Element)
    }

    // ----- internals -----

    fn digitwise(&self, x: Element, y: Element, op: impl Fn(u64, u64, u64) -> u64) -> Element {
        let p = self.spec.p;
        let pp = p as u128;
        let (mut a, mut b) = (x.0, y.0);
        let mut out = 0u128;
        for i in 0..self.m {
            let da = (a % pp) as u64;
            let db = (b % pp) as u64;
            a /= pp;
            b /= pp;
            out += op(da, db, p) as u128 * self.pow_p[i];
        }
        Element(out)
    }

    fn slow_mul(&self, x: Element, y: Element) -> Element {
        if self.spec.p == 2 {
            return self.slow_mul_binary(x, y);
        }
        let p = self.spec.p;
        let m = self.m;
        let a = self.coeffs(x);
        let b = self.coeffs(y);
        let mut prod = vec![0u64; 2 * m];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u128 + ai as u128 * bj as u128) % p as u128) as u64;
            }
        }
        let f = &self.spec.modulus;
        for k in (m..2 * m).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            // θ^k = θ^{k-m} · θ^m = -θ^{k-m} Σ_{i<m} f_i θ^i
            for i in 0..m {
                let t = (c as u128 * f[i] as u128 % p as u128) as u64;
                prod[k - m + i] = (prod[k - m + i] + p - t) % p;
            }
        }
        self.pack_digits(&prod[..m])
    }

    fn slow_mul_binary(&self, x: Element, y: Element) -> Element {
        let m = self.m;
        let top = 1u128 << (m - 1);
        let mask = if m == 128 { u128::MAX } else { (1u128 << m) - 1 };
        let mut acc = 0u128;
        let mut a = x.0;
        let mut b = y.0;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            let carry = a & top != 0;
            a = (a << 1) & mask;
            if carry {
                a ^= self.modulus_bits;
            }
        }
        Element(acc)
    }

    fn slow_pow(&self, x: Element, mut e: u128) -> Element {
        let mut acc = Element::ONE;
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.slow_mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.slow_mul(base, base);
            }
        }
        acc
    }

    fn build_tables(&self) -> Tables {
        let order = self.order as usize;
        let big_n = order - 1;
        let g = self.find_primitive_slow();
        let mut exp = vec![0u32; 2 * big_n.max(1)];
        let mut log = vec![NONE; order];
        let mut cur = Element::ONE;
        for i in 0..big_n {
            exp[i] = cur.0 as u32;
            log[cur.0 as usize] = i as u32;
            cur = self.slow_mul(cur, g);
        }
        for i in big_n..2 * big_n {
            exp[i] = exp[i - big_n];
        }
        let zech = if self.spec.p == 2 {
            None
        } else {
            let p = self.spec.p as u128;
            let z = (0..big_n)
                .map(|i| {
                    let v = exp[i] as u128;
                    // add 1 to the constant digit
                    let w = if v % p == p - 1 { v - (p - 1) } else { v + 1 };
                    if w == 0 {
                        NONE
                    } else {
                        log[w as usize]
                    }
                })
                .collect();
            Some(z)
        };
        let log_minus_one = if self.spec.p == 2 { 0 } else { (big_n / 2) as u32 };
        Tables { exp, log, zech, log_minus_one }
    }

    fn find_primitive_slow(&self) -> Element {
        let big_n = self.order - 1;
        if big_n == 1 {
            return Element::ONE;
        }
        let factors = fp_poly::prime_factors(big_n as u64);
        (1..self.order)
            .map(Element)
            .find(|&g| factors.iter().all(|&r| self.slow_pow(g, big_n / r as u128) != Element::ONE))
            .expect("multiplicative group is cyclic")
    }

    fn build_sigma_basis(&self) -> Vec<Vec<Element>> {
        let n = self.spec.n;
        let m = self.m;
        let basis: Vec<Element> = (0..m).map(|i| Element(self.pow_p[i])).collect();
        // σ(θ^i) by h·s successive p-th powers
        let frob_p: Vec<Element> = basis.iter().map(|&b| self.slow_pow(b, self.spec.p as u128)).collect();
        let sigma1: Vec<Element> = basis
            .iter()
            .map(|&b| {
                let mut v = b;
                for _ in 0..self.spec.h * self.spec.s {
                    v = self.apply_linear(&frob_p, v);
                }
                v
            })
            .collect();
        let mut rows = Vec::with_capacity(n);
        rows.push(basis);
        for j in 1..n {
            let prev: &Vec<Element> = &rows[j - 1];
            let next = prev.iter().map(|&v| self.apply_linear(&sigma1, v)).collect();
            rows.push(next);
        }
        rows
    }
}
