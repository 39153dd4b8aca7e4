//! Dense exact linear algebra: row reduction, kernels, ranks.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::field::{primitive_integer_vector, Field};

pub type Matrix<E> = Vec<Vec<E>>;

/// In-place reduced row echelon form. Returns the pivot columns; rows past
/// the rank are left zero and truncated.
pub fn rref<F: Field>(field: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(pr) = (r..nrows).find(|&i| !field.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, pr);
        let inv = field.inv(&m[r][c]).expect("nonzero pivot");
        if !field.is_one(&inv) {
            for x in m[r][c..].iter_mut() {
                *x = field.mul(x, &inv);
            }
        }
        let (head, tail) = m.split_at_mut(r);
        let (prow, rest) = tail.split_first_mut().expect("pivot row");
        for row in head.iter_mut().chain(rest.iter_mut()) {
            if field.is_zero(&row[c]) {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row[c..].iter_mut().zip(&prow[c..]) {
                if !field.is_zero(y) {
                    *x = field.sub_mul(x, &f, y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    pivots
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    let mut a = m.clone();
    rref(field, &mut a).len()
}

/// Basis of `{x : m x = 0}`, one vector per free column.
pub fn kernel<F: Field>(field: &F, m: &Matrix<F::Elem>, ncols: usize) -> Vec<Vec<F::Elem>> {
    let mut a = m.clone();
    let pivots = rref(field, &mut a);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![field.zero(); ncols];
        v[free] = field.one();
        for (row, &p) in a.iter().zip(&pivots) {
            v[p] = field.neg(&row[free]);
        }
        out.push(v);
    }
    out
}

/// Scales a vector over ℚ to a primitive integer vector; identity in
/// positive characteristic.
pub fn clear_denominators<F: Field>(field: &F, v: &[F::Elem]) -> Vec<F::Elem> {
    if field.characteristic() != 0 {
        return v.to_vec();
    }
    let q: Vec<BigRational> = v
        .iter()
        .map(|c| {
            let (n, d) = field.to_ratio(c);
            BigRational::new(n, d)
        })
        .collect();
    primitive_integer_vector(&q)
        .iter()
        .map(|n| field.from_ratio(n, &BigInt::from(1)).expect("integer in the field"))
        .collect()
}

/// Basis of the left kernel `{y : y m = 0}`.
pub fn left_kernel<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let t: Matrix<F::Elem> = (0..ncols).map(|c| (0..nrows).map(|r| m[r][c].clone()).collect()).collect();
    kernel(field, &t, nrows)
}

/// Inverse of a square matrix, `None` if singular.
pub fn inverse<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    let n = m.len();
    let mut a: Matrix<F::Elem> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            r
        })
        .collect();
    let piv = rref(field, &mut a);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_vec<F: Field>(field: &F, m: &Matrix<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    m.iter()
        .map(|row| {
            row.iter().zip(v).fold(field.zero(), |acc, (a, b)| field.add(&acc, &field.mul(a, b)))
        })
        .collect()
}

/// Row space basis (rows of the rref).
pub fn row_basis<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let mut a = m.clone();
    rref(field, &mut a);
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn q(rows: &[&[i64]]) -> Matrix<BigRational> {
        rows.iter().map(|r| r.iter().map(|&x| Rationals.from_i64(x)).collect()).collect()
    }

    #[test]
    fn kernel_of_rank_two() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&Rationals, &m), 2);
        let k = kernel(&Rationals, &m, 3);
        assert_eq!(k.len(), 1);
        assert!(mat_vec(&Rationals, &m, &k[0]).iter().all(|x| Rationals.is_zero(x)));
    }

    #[test]
    fn inverse_mod_p() {
        let f = PrimeField::new(101).unwrap();
        let m = vec![vec![2u32, 1], vec![7, 4]];
        let inv = inverse(&f, &m).unwrap();
        let prod: Vec<Vec<u32>> = (0..2)
            .map(|i| (0..2).map(|j| f.add(&f.mul(&m[i][0], &inv[0][j]), &f.mul(&m[i][1], &inv[1][j]))).collect())
            .collect();
        assert_eq!(prod, vec![vec![1, 0], vec![0, 1]]);
        assert!(inverse(&f, &vec![vec![1u32, 2], vec![2, 4]]).is_none());
    }

    #[test]
    fn left_kernel_annihilates() {
        let m = q(&[&[1, 1], &[2, 2], &[0, 1]]);
        let k = left_kernel(&Rationals, &m);
        assert_eq!(k.len(), 1);
    }
}
