//! The solution group of the cocycle conditions over `Z_m`.
//!
//! The modulus is split into prime powers. Over each `p^k` the condition
//! matrix is brought to diagonal form `D = U A V` with entries `p^e` by
//! row and column operations, pivoting on an entry of least valuation.
//! Solutions of `A v = 0` are `v = V w` with `p^e w_i = 0`, so the columns
//! of `V` scaled by `p^(k-e)` generate them. The parts are recombined with
//! CRT idempotents.

use super::cocycle::{conditions, CocyclePair};
use super::{validate_cocycle_pair, InvariantError};
use crate::algebra::OrientedSingquandle;

fn prime_power_factors(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        let mut k = 0;
        while m.is_multiple_of(p) {
            m /= p;
            k += 1;
        }
        if k > 0 {
            out.push((p, k));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

fn mul_mod(a: i64, b: i64, q: i64) -> i64 {
    ((a as i128 * b as i128).rem_euclid(q as i128)) as i64
}

/// Inverse of a unit modulo `q`.
fn inv_mod(a: i64, q: i64) -> i64 {
    let (mut r0, mut r1) = (a.rem_euclid(q), q);
    let (mut s0, mut s1) = (1i64, 0i64);
    while r1 != 0 {
        let t = r0 / r1;
        (r0, r1) = (r1, r0 - t * r1);
        (s0, s1) = (s1, s0 - t * s1);
    }
    debug_assert_eq!(r0, 1, "{a} is not a unit modulo {q}");
    s0.rem_euclid(q)
}

/// Exponent of `p` in `a` (with `a != 0` modulo `p^k`).
fn valuation(mut a: i64, p: i64) -> u32 {
    let mut e = 0;
    while a % p == 0 {
        a /= p;
        e += 1;
    }
    e
}

/// The solution group modulo one prime power `p^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimePowerPart {
    pub prime: u64,
    pub exponent: u32,
    /// Generators, each of additive order `orders[i]`.
    pub generators: Vec<Vec<i64>>,
    pub orders: Vec<u64>,
    /// Inverse of the column transform, and the divisibility each transformed coordinate needs.
    inverse: Vec<Vec<i64>>,
    required: Vec<i64>,
}

impl PrimePowerPart {
    fn modulus(&self) -> i64 {
        (self.prime as i64).pow(self.exponent)
    }

    fn contains(&self, v: &[i64]) -> bool {
        let q = self.modulus();
        self.inverse.iter().zip(&self.required).all(|(row, &req)| {
            let w = row.iter().zip(v).fold(0, |acc, (&a, &b)| (acc + mul_mod(a, b, q)) % q);
            w % req == 0
        })
    }
}

fn solve_prime_power(rows: &[Vec<i64>], unknowns: usize, p: u64, k: u32) -> PrimePowerPart {
    let q = (p as i64).pow(k);
    let pi = p as i64;
    let mut a: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(q)).collect())
        .filter(|r: &Vec<i64>| r.iter().any(|&x| x != 0))
        .collect();
    let identity =
        |n: usize| -> Vec<Vec<i64>> { (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect() };
    let mut v = identity(unknowns);
    let mut v_inv = identity(unknowns);
    let mut pivots: Vec<u32> = Vec::new();
    let mut t = 0;
    while t < a.len().min(unknowns) {
        // Entry of least valuation in the remaining block.
        let mut best: Option<(u32, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, &x) in row.iter().enumerate().skip(t) {
                if x != 0 {
                    let e = valuation(x, pi);
                    if best.is_none_or(|b| e < b.0) {
                        best = Some((e, i, j));
                    }
                }
            }
            if best.is_some_and(|b| b.0 == 0) {
                break;
            }
        }
        let Some((e, i, j)) = best else { break };
        a.swap(t, i);
        if j != t {
            for row in a.iter_mut() {
                row.swap(t, j);
            }
            for row in v.iter_mut() {
                row.swap(t, j);
            }
            v_inv.swap(t, j);
        }
        // Scale the pivot row so the pivot is exactly p^e.
        let pe = pi.pow(e);
        let unit = inv_mod(a[t][t] / pe, q);
        for x in a[t].iter_mut() {
            *x = mul_mod(*x, unit, q);
        }
        let pivot_row = a[t].clone();
        for row in a.iter_mut().skip(t + 1) {
            if row[t] != 0 {
                let c = row[t] / pe;
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x - mul_mod(c, y, q)).rem_euclid(q);
                }
            }
        }
        for jj in t + 1..unknowns {
            let entry = a[t][jj];
            if entry == 0 {
                continue;
            }
            let c = entry / pe;
            a[t][jj] = 0;
            // Column jj -= c * column t, applied to V; V^-1 gets row t += c * row jj.
            for row in v.iter_mut() {
                row[jj] = (row[jj] - mul_mod(c, row[t], q)).rem_euclid(q);
            }
            let row_jj = v_inv[jj].clone();
            for (x, &y) in v_inv[t].iter_mut().zip(&row_jj) {
                *x = (*x + mul_mod(c, y, q)).rem_euclid(q);
            }
        }
        pivots.push(e);
        t += 1;
    }
    let mut generators = Vec::new();
    let mut orders = Vec::new();
    let mut required = Vec::new();
    for col in 0..unknowns {
        let e = pivots.get(col).copied().unwrap_or(k).min(k);
        let scale = pi.pow(k - e);
        required.push(if col < pivots.len() { scale } else { 1 });
        if e == 0 {
            continue;
        }
        let scale = if col < pivots.len() { scale } else { 1 };
        let g: Vec<i64> = v.iter().map(|row| mul_mod(row[col], scale, q)).collect();
        generators.push(g);
        orders.push(if col < pivots.len() { pi.pow(e) as u64 } else { q as u64 });
    }
    PrimePowerPart {
        prime: p,
        exponent: k,
        generators,
        orders,
        inverse: v_inv,
        required,
    }
}

/// All cocycle pairs of a singquandle with values in `Z_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleSpace {
    pub order: usize,
    pub modulus: u64,
    pub parts: Vec<PrimePowerPart>,
}

impl CocycleSpace {
    /// Number of cocycle pairs.
    pub fn size(&self) -> u128 {
        self.parts
            .iter()
            .flat_map(|p| p.orders.iter())
            .map(|&o| o as u128)
            .product()
    }

    /// Cyclic factors `Z_d` of the solution group, one per generator.
    pub fn cyclic_orders(&self) -> Vec<u64> {
        self.parts.iter().flat_map(|p| p.orders.iter().copied()).collect()
    }

    /// Generators as pairs over `Z_m`, lifted from each prime-power part.
    pub fn generators(&self) -> Vec<CocyclePair> {
        let m = self.modulus as i64;
        let mut out = Vec::new();
        for part in &self.parts {
            let q = part.modulus();
            // e = 1 mod q and 0 mod m/q.
            let rest = m / q;
            let idempotent = mul_mod(rest, inv_mod(rest % q, q), m);
            for g in &part.generators {
                let lifted: Vec<i64> = g.iter().map(|&x| mul_mod(x, idempotent, m)).collect();
                out.push(CocyclePair::from_vector(self.order, self.modulus, &lifted));
            }
        }
        out
    }

    pub fn contains(&self, cp: &CocyclePair) -> bool {
        if cp.phi.order() != self.order || cp.phi_prime.order() != self.order {
            return false;
        }
        let v = cp.to_vector();
        self.parts.iter().all(|part| {
            let q = part.modulus();
            let local: Vec<i64> = v.iter().map(|x| x.rem_euclid(q)).collect();
            part.contains(&local)
        })
    }
}

/// Solves the cocycle conditions as a linear system over `Z_m`.
pub fn solve_cocycle_space(s: &OrientedSingquandle, modulus: u64) -> Result<CocycleSpace, InvariantError> {
    if modulus < 2 {
        return Err(InvariantError::Modulus(modulus));
    }
    let n = s.order();
    let unknowns = 2 * n * n;
    let rows: Vec<Vec<i64>> = conditions(s)
        .into_iter()
        .map(|c| {
            let mut row = vec![0; unknowns];
            for (k, u) in c.terms {
                row[u] += k;
            }
            row
        })
        .collect();
    let parts = prime_power_factors(modulus)
        .into_iter()
        .map(|(p, k)| solve_prime_power(&rows, unknowns, p, k))
        .collect();
    let space = CocycleSpace {
        order: n,
        modulus,
        parts,
    };
    debug_assert!(space
        .generators()
        .iter()
        .all(|g| validate_cocycle_pair(s, g).map(|r| r.is_valid()).unwrap_or(false)));
    Ok(space)
}
