//! Brute-force reference implementations for cross-checking.
//!
//! Nothing here calls into the other modules: symbols are decided by
//! congruence scans, isotropy by bounded integer search, Witt indices by
//! splitting off explicit hyperbolic planes over `Q`. Inputs are plain
//! integers. Slow by construction.

use std::collections::HashMap;
use std::hash::{BuildHasherDefault, Hasher};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Bounds for the searches below.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Largest absolute coordinate tried by [`isotropy_search`].
    pub height: u64,
    /// Cap on the number of half-vectors stored by the meet-in-the-middle
    /// search; the effective height shrinks in high dimension to respect it.
    pub max_half: u64,
    /// Exponent `k` of the modulus `p^k` at odd primes.
    pub odd_precision: u32,
    /// Exponent `k` of the modulus `2^k`.
    pub dyadic_precision: u32,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            height: 1000,
            max_half: 1_000_000,
            odd_precision: 3,
            dyadic_precision: 8,
        }
    }
}

// Moduli above this are refused.
const MAX_MODULUS: u64 = 1 << 26;

/// Congruence-scan Hilbert symbols with a per-modulus cache of the sets
/// `{k·y² mod M}`.
#[derive(Default)]
pub struct HilbertOracle {
    budget: SearchBudget,
    modulus: u64,
    tables: HashMap<u64, Vec<bool>>,
}

impl HilbertOracle {
    pub fn new(budget: SearchBudget) -> Self {
        HilbertOracle {
            budget,
            modulus: 0,
            tables: HashMap::new(),
        }
    }

    /// `(a, b)_v` for nonzero integers, where `place` is a prime or `None`
    /// for the real place.
    pub fn symbol(&mut self, a: i64, b: i64, place: Option<u64>) -> Result<i8> {
        if a == 0 || b == 0 {
            return Err(Error::domain("Hilbert symbol of zero"));
        }
        let Some(p) = place else {
            return Ok(if a < 0 && b < 0 { -1 } else { 1 });
        };
        let k = if p == 2 { self.budget.dyadic_precision } else { self.budget.odd_precision };
        let m = (p as u128).pow(k);
        if m > MAX_MODULUS as u128 {
            return Err(Error::resource(format!("modulus {p}^{k} too large for a congruence scan")));
        }
        self.set_modulus(m as u64);
        let m = m as u64;
        let (a, b) = (a.rem_euclid(m as i64) as u64, b.rem_euclid(m as i64) as u64);
        // z² = a x² + b y² with one of z, x, y normalized to 1
        let solvable = self.meets(a, 1, m - b) || self.meets(1, a, b) || self.meets(1, b, a);
        Ok(if solvable { 1 } else { -1 })
    }

    fn set_modulus(&mut self, m: u64) {
        if self.modulus != m {
            self.modulus = m;
            self.tables.clear();
        }
    }

    fn table(&mut self, k: u64) -> &[bool] {
        let m = self.modulus;
        self.tables.entry(k).or_insert_with(|| {
            let mut t = vec![false; m as usize];
            for y in 0..m {
                t[(k as u128 * y as u128 * y as u128 % m as u128) as usize] = true;
            }
            t
        })
    }

    // Is `u + v y² ∈ {k x²}` for some y?
    fn meets(&mut self, k: u64, u: u64, v: u64) -> bool {
        let m = self.modulus as u128;
        let table = self.table(k);
        (0..m).any(|y| table[((u as u128 + v as u128 * y * y) % m) as usize])
    }
}

/// One-shot version of [`HilbertOracle::symbol`] with the default budget.
pub fn hilbert_bruteforce(a: i64, b: i64, place: Option<u64>) -> Result<i8> {
    HilbertOracle::new(SearchBudget::default()).symbol(a, b, place)
}

fn isqrt(n: u128) -> Option<u128> {
    let mut r = (n as f64).sqrt() as u128;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    (r * r == n).then_some(r)
}

/// A nonzero integer vector with `Σ a_i x_i² = 0` and `max |x_i| ≤ height`,
/// by meet-in-the-middle over nonnegative coordinates. Small heights are
/// tried first, so short witnesses come back quickly.
pub fn isotropy_search(q: &[i64], budget: &SearchBudget) -> Option<Vec<i64>> {
    let n = q.len();
    if n < 2 || q.iter().all(|&a| a > 0) || q.iter().all(|&a| a < 0) {
        return None;
    }
    let per_side = (n - n / 2) as u32;
    let mut h = budget.height;
    while h > 1 && (h + 1).checked_pow(per_side).is_none_or(|c| c > budget.max_half) {
        h -= 1;
    }
    let mut tried = 0;
    for step in [8, 64, h] {
        let step = step.min(h);
        if step > tried {
            if let Some(w) = search_at_height(q, step) {
                return Some(w);
            }
            tried = step;
        }
    }
    None
}

fn search_at_height(q: &[i64], h: u64) -> Option<Vec<i64>> {
    let n = q.len();
    let left_len = n / 2;

    if n == 2 {
        // a x² = −b y²
        for y in 1..=h as i64 {
            let rhs = -(q[1] as i128) * (y as i128) * (y as i128);
            if rhs % q[0] as i128 == 0 {
                let x2 = rhs / q[0] as i128;
                if x2 > 0 {
                    if let Some(x) = isqrt(x2 as u128) {
                        if x <= h as u128 {
                            return Some(vec![x as i64, y]);
                        }
                    }
                }
            }
        }
        return None;
    }

    let (lq, rq) = q.split_at(left_len);
    let cap = ((h + 1) as usize).pow(left_len as u32);
    let mut left: HashMap<i128, u64, BuildHasherDefault<SumHasher>> =
        HashMap::with_capacity_and_hasher(cap, Default::default());
    let mut cube = Cube::new(lq, h);
    let mut code = 0u64;
    loop {
        // prefer a nonzero half; code 0 is the zero vector
        match left.get(&cube.sum) {
            Some(&prev) if prev != 0 || code == 0 => {}
            _ => {
                left.insert(cube.sum, code);
            }
        }
        code += 1;
        if !cube.advance() {
            break;
        }
    }
    let mut cube = Cube::new(rq, h);
    loop {
        if let Some(&x) = left.get(&-cube.sum) {
            if x != 0 || cube.is_nonzero() {
                let mut v = decode(x, left_len, h + 1);
                v.extend_from_slice(&cube.digits);
                return Some(v);
            }
        }
        if !cube.advance() {
            return None;
        }
    }
}

// Multiplicative hash for the i128 sums.
#[derive(Default)]
struct SumHasher(u64);

impl Hasher for SumHasher {
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 = (self.0.rotate_left(5) ^ b as u64).wrapping_mul(0x51_7c_c1_b7_27_22_0a_95);
        }
    }

    fn write_i128(&mut self, n: i128) {
        let folded = (n as u64) ^ ((n >> 64) as u64).rotate_left(32);
        self.0 = (self.0 ^ folded).wrapping_mul(0x9e37_79b9_7f4a_7c15);
        self.0 ^= self.0 >> 29;
    }
}

fn decode(mut code: u64, len: usize, base: u64) -> Vec<i64> {
    let mut out = vec![0i64; len];
    for slot in out.iter_mut().rev() {
        *slot = (code % base) as i64;
        code /= base;
    }
    out
}

// Odometer over [0, h]^k in lexicographic order, tracking Σ a_i x_i².
struct Cube<'a> {
    coeffs: &'a [i64],
    h: i64,
    digits: Vec<i64>,
    sum: i128,
}

impl<'a> Cube<'a> {
    fn new(coeffs: &'a [i64], h: u64) -> Self {
        Cube {
            coeffs,
            h: h as i64,
            digits: vec![0; coeffs.len()],
            sum: 0,
        }
    }

    fn is_nonzero(&self) -> bool {
        self.digits.iter().any(|&d| d != 0)
    }

    fn advance(&mut self) -> bool {
        for i in (0..self.digits.len()).rev() {
            let a = self.coeffs[i] as i128;
            let d = self.digits[i];
            if d < self.h {
                self.digits[i] = d + 1;
                self.sum += a * (2 * d as i128 + 1);
                return true;
            }
            self.digits[i] = 0;
            self.sum -= a * (d as i128) * (d as i128);
        }
        false
    }
}

/// Lexicographically least nonzero `x ∈ [0, p)^n` with `Σ a_i x_i² ≡ 0 mod p`.
pub fn residue_isotropy(coeffs: &[u64], p: u64) -> Option<Vec<u64>> {
    let n = coeffs.len();
    let mut x = vec![0u64; n];
    loop {
        let mut i = n;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            x[i] += 1;
            if x[i] < p {
                break;
            }
            x[i] = 0;
        }
        let value: u128 = coeffs
            .iter()
            .zip(&x)
            .map(|(&a, &xi)| a as u128 * xi as u128 * xi as u128)
            .sum();
        if value.is_multiple_of(p as u128) {
            return Some(x.clone());
        }
    }
}

// n = s²·c with c squarefree, by trial division; None if too large to finish.
fn square_split(n: &BigInt) -> Option<(BigInt, i64)> {
    let mut rest = n.abs();
    let mut root = BigInt::one();
    let mut core = BigInt::one();
    let mut d = BigInt::from(2);
    while &d * &d <= rest {
        if d > BigInt::from(1_000_000) {
            return None;
        }
        let mut e = 0;
        while (&rest % &d).is_zero() {
            rest /= &d;
            e += 1;
        }
        for _ in 0..e / 2 {
            root *= &d;
        }
        if e % 2 == 1 {
            core *= &d;
        }
        d += 1;
    }
    core *= rest;
    let c = core.to_i64()?;
    Some((root, if n.is_negative() { -c } else { c }))
}

// q = s²·c for a nonzero rational, c a squarefree integer.
fn rational_square_split(q: &BigRational) -> Option<(BigRational, i64)> {
    // q = n/d = n·d / d²
    let (s, c) = square_split(&(q.numer() * q.denom()))?;
    Some((BigRational::new(s, q.denom().clone()), c))
}

// Diagonalizes a symmetric rational matrix by congruence.
fn diagonalize(mut g: Vec<Vec<BigRational>>) -> Vec<BigRational> {
    let n = g.len();
    let mut out = Vec::with_capacity(n);
    let mut alive: Vec<usize> = (0..n).collect();
    while !alive.is_empty() {
        let pivot = alive.iter().copied().find(|&i| !g[i][i].is_zero());
        let pivot = match pivot {
            Some(i) => i,
            None => {
                let pair = alive
                    .iter()
                    .flat_map(|&i| alive.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && !g[i][j].is_zero());
                match pair {
                    None => {
                        // the remaining block is zero: degenerate, cannot happen here
                        debug_assert!(false, "degenerate Gram matrix");
                        alive.retain(|_| false);
                        continue;
                    }
                    Some((i, j)) => {
                        // e_i ← e_i + e_j makes g[i][i] = 2 g[i][j] ≠ 0
                        for k in 0..n {
                            let v = g[j][k].clone();
                            g[i][k] += v;
                        }
                        for k in 0..n {
                            let v = g[k][j].clone();
                            g[k][i] += v;
                        }
                        i
                    }
                }
            }
        };
        let d = g[pivot][pivot].clone();
        alive.retain(|&i| i != pivot);
        for &i in &alive {
            let f = &g[i][pivot] / &d;
            if f.is_zero() {
                continue;
            }
            for k in 0..n {
                let v = &f * &g[pivot][k];
                g[i][k] -= v;
            }
            for k in 0..n {
                let v = &f * &g[k][pivot];
                g[k][i] -= v;
            }
        }
        out.push(d);
    }
    out
}

/// Witt index by repeatedly finding an isotropic vector with
/// [`isotropy_search`] and splitting off the hyperbolic plane it spans
/// with a coordinate vector. A lower bound in general; exact whenever every
/// isotropic stage has a witness within the budget.
pub fn witt_index_by_stripping(q: &[i64], budget: &SearchBudget) -> usize {
    let mut form: Vec<BigRational> = q.iter().map(|&a| BigRational::from_integer(a.into())).collect();
    let mut index = 0;
    while form.len() >= 2 {
        let Some(split) = form.iter().map(rational_square_split).collect::<Option<Vec<_>>>() else {
            break;
        };
        let cores: Vec<i64> = split.iter().map(|(_, c)| *c).collect();
        let Some(w) = isotropy_search(&cores, budget) else {
            break;
        };
        // a_i = s_i² c_i, so v_i = w_i / s_i is isotropic for ⟨a_i⟩
        let v: Vec<BigRational> = w
            .iter()
            .zip(&split)
            .map(|(&wi, (s, _))| BigRational::from_integer(wi.into()) / s)
            .collect();
        let k = v.iter().position(|x| !x.is_zero()).expect("nonzero witness");
        let m = (0..v.len()).rev().find(|&i| i != k && !v[i].is_zero()).expect("two nonzero coordinates");
        // H = span(v, e_m); complement basis g_i = e_i + c_i e_k, i ∉ {k, m}
        let rest: Vec<usize> = (0..form.len()).filter(|&i| i != k && i != m).collect();
        let c: Vec<BigRational> = rest.iter().map(|&i| -(&form[i] * &v[i]) / (&form[k] * &v[k])).collect();
        let gram: Vec<Vec<BigRational>> = rest
            .iter()
            .enumerate()
            .map(|(x, &i)| {
                rest.iter()
                    .enumerate()
                    .map(|(y, &j)| {
                        let diag = if i == j { form[i].clone() } else { BigRational::zero() };
                        diag + &c[x] * &c[y] * &form[k]
                    })
                    .collect()
            })
            .collect();
        form = diagonalize(gram);
        index += 1;
    }
    index
}
