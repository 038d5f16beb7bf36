//! Brute-force reference implementations shared by the integration tests.
//! Nothing here calls into the library's algorithms.

#![allow(dead_code)]

use std::cmp::Ordering;

use farey_core::Frac;

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn cmp_pairs(x: &(i64, i64), y: &(i64, i64)) -> Ordering {
    (x.0 * y.1).cmp(&(y.0 * x.1))
}

/// Every reduced h/k with 0 ≤ h ≤ k ≤ n, sorted by value.
pub fn farey(n: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for k in 1..=n {
        for h in 0..=k {
            if gcd(h, k) == 1 {
                out.push((h, k));
            }
        }
    }
    out.sort_by(cmp_pairs);
    out
}

pub fn in_upper(n: i64, m: i64, (h, k): (i64, i64)) -> bool {
    k <= n && h <= m
}

pub fn in_lower(n: i64, m: i64, (h, k): (i64, i64)) -> bool {
    k <= n && m + k - n <= h
}

pub fn in_bool(n: i64, m: i64, x: (i64, i64)) -> bool {
    in_upper(n, m, x) && in_lower(n, m, x)
}

pub fn filtered(n: i64, pred: impl Fn((i64, i64)) -> bool) -> Vec<(i64, i64)> {
    farey(n).into_iter().filter(|&x| pred(x)).collect()
}

/// μ by trial division.
pub fn mobius(mut d: i64) -> i64 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= d {
        if d % p == 0 {
            d /= p;
            if d % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if d > 1 {
        -sign
    } else {
        sign
    }
}

pub fn pairs(terms: &[Frac]) -> Vec<(i64, i64)> {
    terms.iter().map(|x| (x.h(), x.k())).collect()
}

/// Parses "0/1 1/3 1/2" into pairs.
pub fn row(s: &str) -> Vec<(i64, i64)> {
    s.split_whitespace()
        .map(|t| {
            let (h, k) = t.split_once('/').unwrap();
            (h.parse().unwrap(), k.parse().unwrap())
        })
        .collect()
}

/// Plain 2×2 product on row-major arrays.
pub fn mul(a: [[i64; 2]; 2], b: [[i64; 2]; 2]) -> [[i64; 2]; 2] {
    [
        [
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
        ],
        [
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        ],
    ]
}

/// [h', k'] = M·[h, k].
pub fn act(m: [[i64; 2]; 2], (h, k): (i64, i64)) -> (i64, i64) {
    (m[0][0] * h + m[0][1] * k, m[1][0] * h + m[1][1] * k)
}
