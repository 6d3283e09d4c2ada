//! Exact matrix rank over ℚ and GF(p).
//!
//! Small matrices go through dense elimination; anything with more than
//! [`DENSE_LIMIT`] rows or columns uses sparse column reduction. Over ℚ both
//! paths are fraction-free in `i128` (Bareiss for dense), restarting in
//! `BigInt` if an intermediate value overflows.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{BoundaryMatrix, FieldSpec};

pub const DENSE_LIMIT: usize = 48;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Auto,
    Dense,
    Sparse,
}

pub fn rank(m: &BoundaryMatrix, field: FieldSpec) -> usize {
    rank_with(m, field, Strategy::Auto)
}

pub fn rank_with(m: &BoundaryMatrix, field: FieldSpec, strategy: Strategy) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    let dense = match strategy {
        Strategy::Auto => m.rows() <= DENSE_LIMIT && m.cols() <= DENSE_LIMIT,
        Strategy::Dense => true,
        Strategy::Sparse => false,
    };
    match (dense, field.characteristic()) {
        (true, 0) => dense_rank_rational(m.to_dense()),
        (true, p) => dense_rank_mod_p(m.to_dense(), p as u64),
        (false, 0) => sparse_rank_rational(m.columns()),
        (false, p) => sparse_rank_mod_p(m.columns(), p as u64),
    }
}

fn modp(v: i64, p: u64) -> u64 {
    v.rem_euclid(p as i64) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime.
    let mut base = a % p;
    let mut e = p - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

pub fn dense_rank_mod_p(m: Vec<Vec<i64>>, p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = m
        .into_iter()
        .map(|row| row.into_iter().map(|v| modp(v, p)).collect())
        .collect();
    let n = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        if r == n {
            break;
        }
        let Some(piv) = (r..n).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = inv_mod(a[r][c], p);
        for j in c..cols {
            a[r][j] = a[r][j] * inv % p;
        }
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom.iter_mut() {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for j in c..cols {
                row[j] = (row[j] + (p - f) * pivot_row[j]) % p;
            }
        }
        r += 1;
    }
    r
}

pub fn dense_rank_rational(m: Vec<Vec<i64>>) -> usize {
    let small: Vec<Vec<i128>> = m
        .iter()
        .map(|row| row.iter().map(|&v| v as i128).collect())
        .collect();
    match bareiss_i128(small) {
        Some(r) => r,
        None => bareiss_big(
            m.into_iter()
                .map(|row| row.into_iter().map(BigInt::from).collect())
                .collect(),
        ),
    }
}

/// `None` on overflow.
fn bareiss_i128(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let n = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..cols {
        if r == n {
            break;
        }
        let Some(piv) = (r..n).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pv = pivot_row[c];
        for row in bottom.iter_mut() {
            let f = row[c];
            for j in c + 1..cols {
                let v = row[j]
                    .checked_mul(pv)?
                    .checked_sub(f.checked_mul(pivot_row[j])?)?;
                debug_assert_eq!(v % prev, 0);
                row[j] = v / prev;
            }
            row[c] = 0;
        }
        prev = pv;
        r += 1;
    }
    Some(r)
}

fn bareiss_big(mut a: Vec<Vec<BigInt>>) -> usize {
    let n = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == n {
            break;
        }
        let Some(piv) = (r..n).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, piv);
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pv = pivot_row[c].clone();
        for row in bottom.iter_mut() {
            let f = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let v = &row[j] * &pv - &f * &pivot_row[j];
                let (q, rem) = v.div_rem(&prev);
                assert!(rem.is_zero(), "fraction-free elimination lost exactness");
                row[j] = q;
            }
        }
        prev = pv;
        r += 1;
    }
    r
}

/// Column reduction keyed by lowest nonzero row.
pub fn sparse_rank_mod_p(cols: &[Vec<(u32, i8)>], p: u64) -> usize {
    let mut pivots: HashMap<u32, usize> = HashMap::new();
    let mut reduced: Vec<Vec<(u32, u64)>> = Vec::new();
    for col in cols {
        let mut v: Vec<(u32, u64)> = col
            .iter()
            .map(|&(r, x)| (r, modp(x as i64, p)))
            .filter(|&(_, x)| x != 0)
            .collect();
        while let Some(&(low, coef)) = v.last() {
            match pivots.get(&low) {
                Some(&k) => {
                    let piv = &reduced[k];
                    let pc = piv.last().expect("pivot column is nonzero").1;
                    let factor = coef * inv_mod(pc, p) % p;
                    v = axpy_mod(&v, piv, p - factor, p);
                }
                None => {
                    pivots.insert(low, reduced.len());
                    reduced.push(v);
                    break;
                }
            }
        }
    }
    reduced.len()
}

/// `x + f·y` over GF(p), both sorted by row.
fn axpy_mod(x: &[(u32, u64)], y: &[(u32, u64)], f: u64, p: u64) -> Vec<(u32, u64)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i]);
            i += 1;
        } else if take_y {
            let v = f * y[j].1 % p;
            if v != 0 {
                out.push((y[j].0, v));
            }
            j += 1;
        } else {
            let v = (x[i].1 + f * y[j].1) % p;
            if v != 0 {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn sparse_rank_rational(cols: &[Vec<(u32, i8)>]) -> usize {
    sparse_rank_i128(cols).unwrap_or_else(|| sparse_rank_big(cols))
}

/// Fraction-free column reduction in `i128`; `None` on overflow.
fn sparse_rank_i128(cols: &[Vec<(u32, i8)>]) -> Option<usize> {
    let mut pivots: HashMap<u32, usize> = HashMap::new();
    let mut reduced: Vec<Vec<(u32, i128)>> = Vec::new();
    for col in cols {
        let mut v: Vec<(u32, i128)> = col
            .iter()
            .filter(|&&(_, x)| x != 0)
            .map(|&(r, x)| (r, x as i128))
            .collect();
        while let Some(&(low, coef)) = v.last() {
            match pivots.get(&low) {
                Some(&k) => {
                    let piv = &reduced[k];
                    let pc = piv.last().expect("pivot column is nonzero").1;
                    let g = coef.gcd(&pc);
                    v = combine_i128(&v, pc / g, piv, coef / g)?;
                    let g = v.iter().fold(0i128, |g, &(_, x)| g.gcd(&x));
                    if g > 1 {
                        v.iter_mut().for_each(|(_, x)| *x /= g);
                    }
                }
                None => {
                    pivots.insert(low, reduced.len());
                    reduced.push(v);
                    break;
                }
            }
        }
    }
    Some(reduced.len())
}

/// `a·x − b·y` in `i128`, both sorted by row; `None` on overflow.
fn combine_i128(x: &[(u32, i128)], a: i128, y: &[(u32, i128)], b: i128) -> Option<Vec<(u32, i128)>> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        let (row, v) = if take_x {
            i += 1;
            (x[i - 1].0, a.checked_mul(x[i - 1].1)?)
        } else if take_y {
            j += 1;
            (y[j - 1].0, b.checked_mul(y[j - 1].1)?.checked_neg()?)
        } else {
            i += 1;
            j += 1;
            (x[i - 1].0, a.checked_mul(x[i - 1].1)?.checked_sub(b.checked_mul(y[j - 1].1)?)?)
        };
        if v != 0 {
            out.push((row, v));
        }
    }
    Some(out)
}

fn sparse_rank_big(cols: &[Vec<(u32, i8)>]) -> usize {
    let mut pivots: HashMap<u32, usize> = HashMap::new();
    let mut reduced: Vec<Vec<(u32, BigInt)>> = Vec::new();
    for col in cols {
        let mut v: Vec<(u32, BigInt)> = col
            .iter()
            .filter(|&&(_, x)| x != 0)
            .map(|&(r, x)| (r, BigInt::from(x)))
            .collect();
        while let Some((low, coef)) = v.last().cloned() {
            match pivots.get(&low) {
                Some(&k) => {
                    let piv = &reduced[k];
                    let pc = piv.last().expect("pivot column is nonzero").1.clone();
                    let g = coef.gcd(&pc);
                    v = combine_big(&v, &(&pc / &g), piv, &(&coef / &g));
                    normalize(&mut v);
                }
                None => {
                    pivots.insert(low, reduced.len());
                    reduced.push(v);
                    break;
                }
            }
        }
    }
    reduced.len()
}

/// `a·x − b·y`, both sorted by row.
fn combine_big(x: &[(u32, BigInt)], a: &BigInt, y: &[(u32, BigInt)], b: &BigInt) -> Vec<(u32, BigInt)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        let (row, v) = if take_x {
            i += 1;
            (x[i - 1].0, a * &x[i - 1].1)
        } else if take_y {
            j += 1;
            (y[j - 1].0, -(b * &y[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (x[i - 1].0, a * &x[i - 1].1 - b * &y[j - 1].1)
        };
        if !v.is_zero() {
            out.push((row, v));
        }
    }
    out
}

fn normalize(v: &mut [(u32, BigInt)]) {
    let mut g = BigInt::zero();
    for (_, x) in v.iter() {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() {
        return;
    }
    let g = g.abs();
    for (_, x) in v.iter_mut() {
        *x = &*x / &g;
    }
}
