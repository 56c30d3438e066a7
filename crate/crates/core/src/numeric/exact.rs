//! Exact rank over the rationals by reduction modulo random 61-bit primes.
//!
//! For a fixed integer (or dyadic) matrix of rank `r`, the rank modulo `p`
//! is never larger than `r`, and it is smaller only when `p` divides every
//! nonzero `r x r` minor. A random prime near `2^61` does so with
//! probability below `2^-40` for the matrix sizes used in this crate
//! (entries below `2^50`, dimension below 200), and two primes must agree
//! before a rank is returned.

use nalgebra::DMatrix;
use rand::Rng;

use crate::seed;

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        }
    }

    /// Exact conversion; `None` when some entry is not an integer of
    /// magnitude below `2^62`.
    pub fn from_f64(m: &DMatrix<f64>) -> Option<Self> {
        let mut out = IntMatrix::zeros(m.nrows(), m.ncols());
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                let x = m[(i, j)];
                if x.fract() != 0.0 || x.abs() >= 4.6e18 {
                    return None;
                }
                out.set(i, j, x as i64);
            }
        }
        Some(out)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn to_mod(&self, p: u64) -> ModMatrix {
        ModMatrix {
            rows: self.rows,
            cols: self.cols,
            p,
            data: self.data.iter().map(|&x| reduce_i64(x, p)).collect(),
        }
    }
}

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

fn reduce_i64(x: i64, p: u64) -> u64 {
    let r = (x as i128).rem_euclid(p as i128);
    r as u64
}

/// The exact binary value of `x` reduced modulo the odd prime `p`.
pub fn f64_to_mod(x: f64, p: u64) -> u64 {
    assert!(x.is_finite(), "cannot reduce a non-finite value");
    if x == 0.0 {
        return 0;
    }
    let bits = x.to_bits();
    let negative = bits >> 63 == 1;
    let exp_bits = ((bits >> 52) & 0x7ff) as i64;
    let frac = bits & ((1u64 << 52) - 1);
    let (mantissa, exp) = if exp_bits == 0 {
        (frac, -1074)
    } else {
        (frac | (1u64 << 52), exp_bits - 1075)
    };
    let scale = if exp >= 0 {
        pow_mod(2, exp as u64, p)
    } else {
        pow_mod(inv_mod(2, p), (-exp) as u64, p)
    };
    let v = mul_mod(mantissa % p, scale, p);
    if negative && v != 0 {
        p - v
    } else {
        v
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % small == 0 {
            return n == small;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // deterministic for all 64-bit n
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A uniformly drawn prime in `[2^60, 2^61)`.
pub fn random_prime(rng: &mut impl Rng) -> u64 {
    loop {
        let candidate = rng.gen_range((1u64 << 60)..(1u64 << 61)) | 1;
        if is_prime(candidate) {
            return candidate;
        }
    }
}

/// Dense matrix over `F_p`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModMatrix {
    rows: usize,
    cols: usize,
    p: u64,
    data: Vec<u64>,
}

impl ModMatrix {
    pub fn zeros(rows: usize, cols: usize, p: u64) -> Self {
        ModMatrix {
            rows,
            cols,
            p,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_f64(m: &DMatrix<f64>, p: u64) -> Self {
        let mut out = ModMatrix::zeros(m.nrows(), m.ncols(), p);
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                out.set(i, j, f64_to_mod(m[(i, j)], p));
            }
        }
        out
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn transpose(&self) -> ModMatrix {
        let mut t = ModMatrix::zeros(self.cols, self.rows, self.p);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            if pr != row {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, row * self.cols + j);
                }
            }
            let inv = inv_mod(self.get(row, col), p);
            for j in col..self.cols {
                let v = mul_mod(self.get(row, j), inv, p);
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col);
                if factor == 0 {
                    continue;
                }
                for j in col..self.cols {
                    let sub = mul_mod(factor, self.get(row, j), p);
                    let v = (self.get(r, j) + p - sub) % p;
                    self.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{x : M x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<u64>> {
        let mut r = self.clone();
        let pivots = r.rref();
        let p = self.p;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![0u64; self.cols];
                x[f] = 1;
                for (k, &pc) in pivots.iter().enumerate() {
                    let v = r.get(k, f);
                    x[pc] = (p - v) % p;
                }
                x
            })
            .collect()
    }
}

/// Exact rank of an integer matrix, using two random primes that must agree.
pub fn rank_exact(m: &IntMatrix) -> usize {
    rank_exact_seeded(m, 0x5eed)
}

pub fn rank_exact_seeded(m: &IntMatrix, seed: u64) -> usize {
    agreeing_rank(seed, |p| m.to_mod(p).rank())
}

/// Exact rank of the matrix whose entries are the exact binary values of
/// the given floats.
pub fn rank_exact_f64(m: &DMatrix<f64>) -> usize {
    agreeing_rank(0xf64, |p| ModMatrix::from_f64(m, p).rank())
}

fn agreeing_rank(seed: u64, rank_mod: impl Fn(u64) -> usize) -> usize {
    let mut best = 0;
    for round in 0..8 {
        let mut rng = seed::rng(seed, round);
        let r1 = rank_mod(random_prime(&mut rng));
        let r2 = rank_mod(random_prime(&mut rng));
        if r1 == r2 {
            return r1;
        }
        // a prime can only lose rank
        best = best.max(r1).max(r2);
    }
    best
}
