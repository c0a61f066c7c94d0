//! Dense polynomials over F_p, used only for choosing and re-checking moduli.
//!
//! Coefficients are stored constant term first with no trailing zeros
//! (the zero polynomial is the empty vector).

pub(crate) type Poly = Vec<u64>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn mul_mod_p(x: u64, y: u64, p: u64) -> u64 {
    ((x as u128 * y as u128) % p as u128) as u64
}

pub(crate) fn inv_mod_p(x: u64, p: u64) -> u64 {
    // p is prime, Fermat.
    pow_mod_p(x, p - 2, p)
}

pub(crate) fn pow_mod_p(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod_p(acc, base, p);
        }
        base = mul_mod_p(base, base, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> Poly {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

pub(crate) fn rem(a: &[u64], f: &[u64], p: u64) -> Poly {
    let mut r = trim(a.to_vec());
    let df = f.len() - 1;
    let lead_inv = inv_mod_p(f[df], p);
    while r.len() > df {
        let shift = r.len() - 1 - df;
        let c = mul_mod_p(*r.last().unwrap(), lead_inv, p);
        for (i, &fc) in f.iter().enumerate() {
            let t = mul_mod_p(c, fc, p);
            r[shift + i] = (r[shift + i] + p - t) % p;
        }
        r = trim(r);
    }
    r
}

pub(crate) fn mul_rem(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + mul_mod_p(x, y, p)) % p;
        }
    }
    rem(&prod, f, p)
}

/// `g^(p^k) mod f`, by k successive p-th powers.
pub(crate) fn frobenius_iter(g: &[u64], k: usize, f: &[u64], p: u64) -> Poly {
    let mut cur = rem(g, f, p);
    for _ in 0..k {
        let mut acc: Poly = vec![1];
        let mut base = cur.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_rem(&acc, &base, f, p);
            }
            e >>= 1;
            if e > 0 {
                base = mul_rem(&base, &base, f, p);
            }
        }
        cur = acc;
    }
    cur
}

pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's test: `f` (monic, degree m) is irreducible over F_p iff
/// `x^(p^m) = x mod f` and `gcd(x^(p^(m/l)) - x, f) = 1` for each prime `l | m`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let f = trim(f.to_vec());
    if f.len() < 2 {
        return false;
    }
    let m = f.len() - 1;
    if m == 1 {
        return true;
    }
    let x: Poly = vec![0, 1];
    let full = frobenius_iter(&x, m, &f, p);
    if !sub(&full, &x, p).is_empty() {
        return false;
    }
    for l in prime_factors(m as u64) {
        let part = frobenius_iter(&x, m / l as usize, &f, p);
        let diff = sub(&part, &x, p);
        let g = gcd(&f, &diff, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
