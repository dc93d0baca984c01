//! Fraction-free (Bareiss) elimination over big integers.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::projective::canonical_ints;

/// Exact determinant of a square integer matrix.
pub(crate) fn det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut prev = BigInt::one();
    let mut negate = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Spanning vector of a one-dimensional right nullspace, canonicalized.
///
/// Pivots are chosen over the whole remaining submatrix by largest absolute
/// value, scanning columns first so ties go to the leftmost column. Returns
/// `None` when the nullity is not exactly one.
pub(crate) fn nullspace_vector<const N: usize>(rows: &[[BigInt; N]]) -> Option<[BigInt; N]> {
    let m = rows.len();
    let mut a: Vec<Vec<BigInt>> = rows.iter().map(|r| r.to_vec()).collect();
    let mut perm: [usize; N] = core::array::from_fn(|i| i);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for k in 0..m.min(N) {
        let mut best: Option<(usize, usize)> = None;
        for j in k..N {
            for i in k..m {
                if a[i][j].is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bi, bj)) => a[i][j].abs() > a[bi][bj].abs(),
                };
                if better {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(k, pi);
        if pj != k {
            for row in a.iter_mut() {
                row.swap(k, pj);
            }
            perm.swap(k, pj);
        }
        for i in k + 1..m {
            for j in k + 1..N {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
        rank += 1;
    }
    if rank + 1 != N {
        return None;
    }

    // Back-substitution in the permuted basis with the single free variable
    // set to the last pivot product, so every entry stays integral.
    let mut x: Vec<(BigInt, BigInt)> = alloc::vec![(BigInt::zero(), BigInt::one()); N];
    x[N - 1] = (BigInt::one(), BigInt::one());
    for i in (0..rank).rev() {
        // x_i = -(sum_{j>i} a[i][j] x_j) / a[i][i], kept as num/den
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for j in i + 1..N {
            let (ref xn, ref xd) = x[j];
            if xn.is_zero() || a[i][j].is_zero() {
                continue;
            }
            // num/den + a_ij * xn/xd
            let t = &a[i][j] * xn;
            num = &num * xd + &t * &den;
            den = &den * xd;
            let g = num.gcd(&den);
            if !g.is_one() && !g.is_zero() {
                num = &num / &g;
                den = &den / &g;
            }
        }
        let mut n = -num;
        let mut d = den * &a[i][i];
        let g = n.gcd(&d);
        if !g.is_zero() {
            n = &n / &g;
            d = &d / &g;
        }
        x[i] = (n, d);
    }
    let l = x.iter().fold(BigInt::one(), |l, (_, d)| l.lcm(d));
    let mut out: [BigInt; N] = core::array::from_fn(|_| BigInt::zero());
    for (k, (n, d)) in x.into_iter().enumerate() {
        out[perm[k]] = n * (&l / d);
    }
    canonical_ints(out)
}
