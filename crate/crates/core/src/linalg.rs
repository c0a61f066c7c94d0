//! Gaussian elimination over F_p on vectors of F_{p^m} coordinates.
//!
//! Vectors are field elements read through their coordinate digits, so
//! a set of elements is an F_p-spanning set and a list of images is the
//! column list of an F_p-linear map.

use crate::gf::{Element, Field};

/// Rank over F_p of the given vectors.
pub fn rank(field: &Field, vectors: &[Element]) -> usize {
    if field.p() == 2 {
        return rank_binary(vectors.iter().map(|v| v.packed()));
    }
    let rows: Vec<Vec<u64>> = vectors.iter().map(|&v| field.coeffs(v)).collect();
    echelon(rows, field.p()).len()
}

fn rank_binary(vectors: impl Iterator<Item = u128>) -> usize {
    // basis indexed by leading bit
    let mut basis = [0u128; 128];
    let mut r = 0;
    for mut v in vectors {
        while v != 0 {
            let top = 127 - v.leading_zeros() as usize;
            if basis[top] == 0 {
                basis[top] = v;
                r += 1;
                break;
            }
            v ^= basis[top];
        }
    }
    r
}

/// Row echelon form (reduced) of the rows, zero rows dropped.
pub(crate) fn echelon(mut rows: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(sel) = (pivot_row..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(pivot_row, sel);
        let inv = crate::gf::fp_poly::inv_mod_p(rows[pivot_row][col], p);
        for x in rows[pivot_row].iter_mut() {
            *x = mulp(*x, inv, p);
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pivot_row || row[col] == 0 {
                continue;
            }
            let c = row[col];
            for (x, &pv) in row.iter_mut().zip(pivot.iter()) {
                *x = (*x + p - mulp(c, pv, p)) % p;
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
    rows
}

fn mulp(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Basis of the F_p-kernel of the linear map whose i-th column (image of
/// the i-th coordinate vector) is `columns[i]`. Kernel vectors are
/// returned as field elements (coordinates packed).
pub fn nullspace(field: &Field, columns: &[Element]) -> Vec<Element> {
    let p = field.p();
    let m = field.m();
    let ncols = columns.len();
    // matrix rows = output coordinates
    let col_digits: Vec<Vec<u64>> = columns.iter().map(|&c| field.coeffs(c)).collect();
    let rows: Vec<Vec<u64>> = (0..m).map(|r| (0..ncols).map(|c| col_digits[c][r]).collect()).collect();
    let ech = echelon(rows, p);
    let pivots: Vec<usize> = ech.iter().map(|r| r.iter().position(|&x| x != 0).unwrap()).collect();
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; ncols];
        v[free] = 1;
        for (row, &pc) in ech.iter().zip(pivots.iter()) {
            v[pc] = (p - row[free]) % p;
        }
        assert!(ncols <= m, "kernel vectors must fit the field basis");
        let mut padded = v;
        padded.resize(m, 0);
        out.push(field.pack_digits(&padded));
    }
    out
}

/// Reduced echelon basis of the F_p-span of the vectors.
pub fn span_basis(field: &Field, vectors: &[Element]) -> Vec<Element> {
    let rows: Vec<Vec<u64>> = vectors.iter().map(|&v| field.coeffs(v)).collect();
    if rows.is_empty() {
        return Vec::new();
    }
    // reverse so the echelon form pivots on the top coordinate first
    let rev: Vec<Vec<u64>> = rows.into_iter().map(|mut r| {
        r.reverse();
        r
    }).collect();
    echelon(rev, field.p())
        .into_iter()
        .map(|mut r| {
            r.reverse();
            field.pack_digits(&r)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_and_generic_rank_agree() {
        let f = Field::new(2, 1, 6, 1).unwrap();
        let vs: Vec<Element> = [3u128, 5, 6, 12, 10].iter().map(|&v| f.element(v).unwrap()).collect();
        // 3 ^ 5 = 6, 12 ^ 6 = 10
        assert_eq!(rank(&f, &vs), 3);
        let rows: Vec<Vec<u64>> = vs.iter().map(|&v| f.coeffs(v)).collect();
        assert_eq!(echelon(rows, 2).len(), 3);
    }

    #[test]
    fn nullspace_of_frobenius_minus_identity_is_fq() {
        // over F_{3^4} with q = 9: x ↦ x^9 − x has kernel F_9, F_3-dimension 2
        let f = Field::new(3, 2, 2, 1).unwrap();
        let cols: Vec<Element> = (0..f.m())
            .map(|i| {
                let b = f.basis(i);
                f.sub(f.pow(b, 9), b)
            })
            .collect();
        let ker = nullspace(&f, &cols);
        assert_eq!(ker.len(), 2);
        for v in ker {
            assert!(f.is_in_fq(v));
        }
    }

    #[test]
    fn span_basis_is_canonical() {
        let f = Field::new(3, 1, 3, 1).unwrap();
        let a = f.element(5).unwrap();
        let b = f.element(9).unwrap();
        let s1 = span_basis(&f, &[a, b]);
        let s2 = span_basis(&f, &[f.add(a, b), f.sub(a, b), a]);
        assert_eq!(s1, s2);
        assert_eq!(s1.len(), 2);
    }
}
