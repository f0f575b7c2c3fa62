//! Symmetric functions in the power-sum basis: `h_r`, `q_r`, Schur `s_λ`,
//! Schur `Q_α` and `P_α`, and the change of basis from power sums to `P`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::{odd_part_partitions, strict_partitions, Partition, StrictPartition};

/// A finite rational combination of power sums `p_ν`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PowerSumPoly {
    coeffs: BTreeMap<Partition, BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl PowerSumPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::power_sum(Partition::empty())
    }

    /// `p_ν`.
    pub fn power_sum(nu: Partition) -> Self {
        Self::term(nu, BigRational::one())
    }

    pub fn term(nu: Partition, c: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(nu, c);
        }
        PowerSumPoly { coeffs }
    }

    pub fn coeff(&self, nu: &Partition) -> BigRational {
        self.coeffs.get(nu).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the (homogeneous) element; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next().map(Partition::size)
    }

    pub fn is_homogeneous(&self) -> bool {
        let d = self.degree();
        self.coeffs.keys().all(|k| Some(k.size()) == d)
    }

    /// Membership in the subring generated by odd power sums.
    pub fn is_gamma(&self) -> bool {
        self.coeffs.keys().all(|k| k.parts().iter().all(|p| p % 2 == 1))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        PowerSumPoly {
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    fn add_term(&mut self, k: Partition, v: BigRational) {
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(k) {
            Entry::Vacant(e) => {
                if !v.is_zero() {
                    e.insert(v);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += v;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

impl Add for &PowerSumPoly {
    type Output = PowerSumPoly;
    fn add(self, rhs: &PowerSumPoly) -> PowerSumPoly {
        let mut out = self.clone();
        for (k, v) in &rhs.coeffs {
            out.add_term(k.clone(), v.clone());
        }
        out
    }
}

impl Sub for &PowerSumPoly {
    type Output = PowerSumPoly;
    fn sub(self, rhs: &PowerSumPoly) -> PowerSumPoly {
        let mut out = self.clone();
        for (k, v) in &rhs.coeffs {
            out.add_term(k.clone(), -v.clone());
        }
        out
    }
}

impl Mul for &PowerSumPoly {
    type Output = PowerSumPoly;
    fn mul(self, rhs: &PowerSumPoly) -> PowerSumPoly {
        let mut out = PowerSumPoly::zero();
        for (k1, v1) in &self.coeffs {
            for (k2, v2) in &rhs.coeffs {
                out.add_term(k1.union(k2), v1 * v2);
            }
        }
        out
    }
}

impl Neg for &PowerSumPoly {
    type Output = PowerSumPoly;
    fn neg(self) -> PowerSumPoly {
        self.scale(&rat(-1))
    }
}

impl fmt::Display for PowerSumPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, v)) in self.coeffs.iter().rev().enumerate() {
            let sign = if v.is_negative() { "-" } else if i > 0 { "+" } else { "" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else {
                write!(f, "{sign}")?;
            }
            let a = v.abs();
            if k.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "p[{k}]")?;
            } else {
                write!(f, "{a}·p[{k}]")?;
            }
        }
        Ok(())
    }
}

/// Commutative ring operations needed by [`pfaffian`] and [`det`].
pub trait RingElem: Clone {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn ring_is_zero(&self) -> bool;
    fn ring_add(&self, o: &Self) -> Self;
    fn ring_sub(&self, o: &Self) -> Self;
    fn ring_mul(&self, o: &Self) -> Self;
}

impl RingElem for BigRational {
    fn ring_zero() -> Self {
        Zero::zero()
    }
    fn ring_one() -> Self {
        One::one()
    }
    fn ring_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn ring_add(&self, o: &Self) -> Self {
        self + o
    }
    fn ring_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn ring_mul(&self, o: &Self) -> Self {
        self * o
    }
}

impl RingElem for PowerSumPoly {
    fn ring_zero() -> Self {
        PowerSumPoly::zero()
    }
    fn ring_one() -> Self {
        PowerSumPoly::one()
    }
    fn ring_is_zero(&self) -> bool {
        PowerSumPoly::is_zero(self)
    }
    fn ring_add(&self, o: &Self) -> Self {
        self + o
    }
    fn ring_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn ring_mul(&self, o: &Self) -> Self {
        self * o
    }
}

fn check_square<T>(m: &[Vec<T>]) -> Result<usize> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::Domain("matrix is not square".into()));
    }
    if n > 30 {
        return Err(Error::Domain(format!("matrix of size {n} is too large")));
    }
    Ok(n)
}

/// Pfaffian by expansion along the first remaining row, memoised on the
/// set of remaining indices.
pub fn pfaffian<T: RingElem>(m: &[Vec<T>]) -> Result<T> {
    let n = check_square(m)?;
    if n % 2 == 1 {
        return Err(Error::Domain(format!("Pfaffian of odd dimension {n}")));
    }
    for i in 0..n {
        if !m[i][i].ring_is_zero() {
            return Err(Error::Domain("matrix is not antisymmetric".into()));
        }
        for j in i + 1..n {
            if !m[i][j].ring_add(&m[j][i]).ring_is_zero() {
                return Err(Error::Domain("matrix is not antisymmetric".into()));
            }
        }
    }
    let mut memo = HashMap::new();
    Ok(pf_rec(m, (1u32 << n) - 1, &mut memo))
}

fn pf_rec<T: RingElem>(m: &[Vec<T>], mask: u32, memo: &mut HashMap<u32, T>) -> T {
    if mask == 0 {
        return T::ring_one();
    }
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let i = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << i);
    let mut acc = T::ring_zero();
    let mut plus = true;
    for j in 0..m.len() {
        if rest & (1 << j) == 0 {
            continue;
        }
        if !m[i][j].ring_is_zero() {
            let t = m[i][j].ring_mul(&pf_rec(m, rest & !(1 << j), memo));
            acc = if plus { acc.ring_add(&t) } else { acc.ring_sub(&t) };
        }
        plus = !plus;
    }
    memo.insert(mask, acc.clone());
    acc
}

/// Determinant by Laplace expansion down the rows, memoised on the set of
/// columns already used. Zero entries are skipped.
pub fn det<T: RingElem>(m: &[Vec<T>]) -> Result<T> {
    check_square(m)?;
    let mut memo = HashMap::new();
    Ok(det_rec(m, 0, 0, &mut memo))
}

fn det_rec<T: RingElem>(m: &[Vec<T>], row: usize, used: u32, memo: &mut HashMap<u32, T>) -> T {
    if row == m.len() {
        return T::ring_one();
    }
    if let Some(v) = memo.get(&used) {
        return v.clone();
    }
    let mut acc = T::ring_zero();
    let mut plus = true;
    for j in 0..m.len() {
        if used & (1 << j) != 0 {
            continue;
        }
        if !m[row][j].ring_is_zero() {
            let t = m[row][j].ring_mul(&det_rec(m, row + 1, used | (1 << j), memo));
            acc = if plus { acc.ring_add(&t) } else { acc.ring_sub(&t) };
        }
        plus = !plus;
    }
    memo.insert(used, acc.clone());
    acc
}

type SeriesCache = OnceLock<RwLock<Vec<PowerSumPoly>>>;

static H_CACHE: SeriesCache = OnceLock::new();
static Q_CACHE: SeriesCache = OnceLock::new();

/// Fills `cache` up to index `r` with `r·c_r = Σ_k w(k)·p_k·c_{r−k}`.
fn series(cache: &SeriesCache, r: usize, weight: fn(usize) -> i64) -> PowerSumPoly {
    let lock = cache.get_or_init(|| RwLock::new(vec![PowerSumPoly::one()]));
    if let Some(v) = lock.read().expect("series cache poisoned").get(r) {
        return v.clone();
    }
    let mut known = lock.read().expect("series cache poisoned").clone();
    while known.len() <= r {
        let m = known.len();
        let mut acc = PowerSumPoly::zero();
        for k in 1..=m {
            let w = weight(k);
            if w == 0 {
                continue;
            }
            let pk = PowerSumPoly::term(Partition::from_unsorted(vec![k]), rat(w));
            acc = &acc + &(&pk * &known[m - k]);
        }
        known.push(acc.scale(&BigRational::new(BigInt::one(), BigInt::from(m))));
    }
    let mut w = lock.write().expect("series cache poisoned");
    if w.len() < known.len() {
        *w = known.clone();
    }
    known[r].clone()
}

/// Complete homogeneous `h_r`, from `exp(Σ p_k u^k / k)`.
pub fn h_gen(r: usize) -> PowerSumPoly {
    series(&H_CACHE, r, |_| 1)
}

/// One-row `q_r`, from `exp(2 Σ_{k odd} p_k u^k / k)`.
pub fn q_gen(r: usize) -> PowerSumPoly {
    series(&Q_CACHE, r, |k| if k % 2 == 1 { 2 } else { 0 })
}

/// Two-row `Q_{(a,b)}`, with `Q_{(a,0)} = q_a`.
pub fn schur_q_two_row(a: usize, b: usize) -> PowerSumPoly {
    let mut acc = &q_gen(a) * &q_gen(b);
    for i in 1..=b {
        let t = (&q_gen(a + i) * &q_gen(b - i)).scale(&rat(2));
        acc = if i % 2 == 1 { &acc - &t } else { &acc + &t };
    }
    acc
}

/// Schur `Q_α` via the Pfaffian of two-row `Q`s.
pub fn schur_q(alpha: &StrictPartition) -> PowerSumPoly {
    let mut parts = alpha.parts().to_vec();
    match parts.len() {
        0 => return PowerSumPoly::one(),
        1 => return q_gen(parts[0]),
        2 => return schur_q_two_row(parts[0], parts[1]),
        _ => {}
    }
    if parts.len() % 2 == 1 {
        parts.push(0);
    }
    let n = parts.len();
    let mut m = vec![vec![PowerSumPoly::zero(); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let q = schur_q_two_row(parts[i], parts[j]);
            m[j][i] = -&q;
            m[i][j] = q;
        }
    }
    pfaffian(&m).expect("antisymmetric by construction")
}

/// Schur `P_α = 2^{−ℓ(α)} Q_α`.
pub fn schur_p(alpha: &StrictPartition) -> PowerSumPoly {
    let d = BigInt::one() << alpha.len();
    schur_q(alpha).scale(&BigRational::new(BigInt::one(), d))
}

/// Schur `s_λ` by Jacobi–Trudi in the `h_r`.
pub fn schur_s(lambda: &Partition) -> PowerSumPoly {
    let l = lambda.len();
    let m: Vec<Vec<PowerSumPoly>> = (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| {
                    let k = lambda.part(i) as i64 - i as i64 + j as i64;
                    if k < 0 {
                        PowerSumPoly::zero()
                    } else {
                        h_gen(k as usize)
                    }
                })
                .collect()
        })
        .collect();
    det(&m).expect("square by construction")
}

/// `z_ν = ∏ k^{m_k} m_k!`.
pub fn z(nu: &Partition) -> BigInt {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in nu.parts() {
        *counts.entry(p).or_default() += 1;
    }
    counts.iter().fold(BigInt::one(), |acc, (&k, &m)| {
        let mut f = acc * BigInt::from(k).pow(m as u32);
        for i in 2..=m {
            f *= BigInt::from(i);
        }
        f
    })
}

/// Transition data between `{p_ν : ν odd}` and `{P_α : α strict}` in degree `n`.
#[derive(Debug)]
pub struct PBasis {
    pub strict: Vec<StrictPartition>,
    pub classes: Vec<Partition>,
    /// `coords[a][c]` is the coefficient of `P_{strict[a]}` in `p_{classes[c]}`.
    pub coords: Vec<Vec<BigRational>>,
}

impl PBasis {
    fn compute(n: usize) -> Result<Self> {
        let strict = strict_partitions(n);
        let classes = odd_part_partitions(n);
        if strict.len() != classes.len() {
            return Err(Error::Consistency(format!("Γ_{n} basis sizes differ")));
        }
        let polys: Vec<PowerSumPoly> = strict.iter().map(schur_p).collect();
        // rows: classes; columns: strict labels
        let a: Vec<Vec<BigRational>> = classes
            .iter()
            .map(|nu| polys.iter().map(|p| p.coeff(nu)).collect())
            .collect();
        let inv = invert(a)?;
        Ok(PBasis { strict, classes, coords: inv })
    }

    pub fn strict_index(&self, alpha: &StrictPartition) -> Option<usize> {
        self.strict.binary_search_by(|x| alpha.cmp(x)).ok()
    }

    pub fn class_index(&self, nu: &Partition) -> Option<usize> {
        self.classes.binary_search_by(|x| nu.cmp(x)).ok()
    }
}

/// Exact Gauss–Jordan inverse over the rationals.
pub fn invert(mut a: Vec<Vec<BigRational>>) -> Result<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { rat(1) } else { rat(0) }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::Consistency("singular system".into()))?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let t = &f * &a[col][j];
                a[r][j] -= t;
                let t = &f * &inv[col][j];
                inv[r][j] -= t;
            }
        }
    }
    Ok(inv)
}

static P_BASES: OnceLock<RwLock<HashMap<usize, Arc<PBasis>>>> = OnceLock::new();

/// Cached [`PBasis`] for degree `n`.
pub fn p_basis(n: usize) -> Result<Arc<PBasis>> {
    let lock = P_BASES.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(b) = lock.read().expect("basis cache poisoned").get(&n) {
        return Ok(b.clone());
    }
    let b = Arc::new(PBasis::compute(n)?);
    Ok(lock
        .write()
        .expect("basis cache poisoned")
        .entry(n)
        .or_insert(b)
        .clone())
}

/// Coefficients of `f` in the `P`-basis.
pub fn expand_in_p(f: &PowerSumPoly) -> Result<BTreeMap<StrictPartition, BigRational>> {
    let Some(n) = f.degree() else {
        return Ok(BTreeMap::new());
    };
    if !f.is_gamma() || !f.is_homogeneous() {
        return Err(Error::Domain("expected a homogeneous element of Γ".into()));
    }
    let basis = p_basis(n)?;
    let mut out = BTreeMap::new();
    for (a, alpha) in basis.strict.iter().enumerate() {
        let mut c = BigRational::zero();
        for (nu, v) in f.terms() {
            let ci = basis.class_index(nu).expect("odd-part key of degree n");
            c += v * &basis.coords[a][ci];
        }
        if !c.is_zero() {
            out.insert(alpha.clone(), c);
        }
    }
    Ok(out)
}

/// Polynomials in finitely many variables, used to check `P_α` against its
/// defining symmetrisation.
pub mod variables {
    use super::*;

    /// Map from exponent vector to coefficient.
    #[derive(Clone, Debug, Default, PartialEq, Eq)]
    pub struct VarPoly(pub BTreeMap<Vec<u32>, BigRational>);

    impl VarPoly {
        pub fn constant(nvars: usize, c: BigRational) -> Self {
            let mut m = BTreeMap::new();
            if !c.is_zero() {
                m.insert(vec![0; nvars], c);
            }
            VarPoly(m)
        }

        pub fn var(nvars: usize, i: usize) -> Self {
            let mut e = vec![0; nvars];
            e[i] = 1;
            VarPoly([(e, rat(1))].into_iter().collect())
        }

        fn add_term(&mut self, e: Vec<u32>, c: BigRational) {
            let entry = self.0.entry(e).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                self.0.retain(|_, v| !v.is_zero());
            }
        }

        pub fn add(&self, o: &Self) -> Self {
            let mut out = self.clone();
            for (e, c) in &o.0 {
                out.add_term(e.clone(), c.clone());
            }
            out
        }

        pub fn sub(&self, o: &Self) -> Self {
            let mut out = self.clone();
            for (e, c) in &o.0 {
                out.add_term(e.clone(), -c.clone());
            }
            out
        }

        pub fn mul(&self, o: &Self) -> Self {
            let mut out = VarPoly::default();
            for (e1, c1) in &self.0 {
                for (e2, c2) in &o.0 {
                    let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                    out.add_term(e, c1 * c2);
                }
            }
            out
        }

        pub fn scale(&self, c: &BigRational) -> Self {
            VarPoly(
                self.0
                    .iter()
                    .map(|(e, v)| (e.clone(), v * c))
                    .filter(|(_, v)| !v.is_zero())
                    .collect(),
            )
        }

        /// Substitute `x_i ↦ x_{perm[i]}`.
        pub fn permute(&self, perm: &[usize]) -> Self {
            let mut out = VarPoly::default();
            for (e, c) in &self.0 {
                let mut f = vec![0; e.len()];
                for (i, &x) in e.iter().enumerate() {
                    f[perm[i]] = x;
                }
                out.add_term(f, c.clone());
            }
            out
        }
    }

    fn power_sum_vars(nvars: usize, k: usize) -> VarPoly {
        let mut out = VarPoly::default();
        for i in 0..nvars {
            let mut e = vec![0; nvars];
            e[i] = k as u32;
            out.add_term(e, rat(1));
        }
        out
    }

    /// Specialise a power-sum expression to `nvars` variables.
    pub fn specialise(f: &PowerSumPoly, nvars: usize) -> VarPoly {
        let mut out = VarPoly::default();
        for (nu, c) in f.terms() {
            let mut t = VarPoly::constant(nvars, c.clone());
            for &k in nu.parts() {
                t = t.mul(&power_sum_vars(nvars, k));
            }
            out = out.add(&t);
        }
        out
    }

    pub fn vandermonde(nvars: usize) -> VarPoly {
        let mut v = VarPoly::constant(nvars, rat(1));
        for i in 0..nvars {
            for j in i + 1..nvars {
                v = v.mul(&VarPoly::var(nvars, i).sub(&VarPoly::var(nvars, j)));
            }
        }
        v
    }

    fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
        if n == 0 {
            return vec![(vec![], true)];
        }
        let mut out = Vec::new();
        for (p, even) in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                // inserting at `pos` moves the new largest past `len − pos` entries
                let shifts = p.len() - pos;
                out.push((q, even == (shifts % 2 == 0)));
            }
        }
        out
    }

    /// `V · P_α(x_1,…,x_m)` from the symmetrisation
    /// `P_α = (m−ℓ)!⁻¹ Σ_w w(x^α ∏_{i≤ℓ, i<j} (x_i+x_j)/(x_i−x_j))`,
    /// computed as an antisymmetrisation so no division is needed.
    pub fn vandermonde_times_schur_p(alpha: &StrictPartition, nvars: usize) -> VarPoly {
        let l = alpha.len();
        assert!(l <= nvars, "too few variables");
        let x = |i| VarPoly::var(nvars, i);
        let mut f = VarPoly::constant(nvars, rat(1));
        for (i, &a) in alpha.parts().iter().enumerate() {
            for _ in 0..a {
                f = f.mul(&x(i));
            }
        }
        for i in 0..nvars {
            for j in i + 1..nvars {
                let factor = if i < l { x(i).add(&x(j)) } else { x(i).sub(&x(j)) };
                f = f.mul(&factor);
            }
        }
        let mut acc = VarPoly::default();
        for (perm, even) in permutations(nvars) {
            let t = f.permute(&perm);
            acc = if even { acc.add(&t) } else { acc.sub(&t) };
        }
        let fact: i64 = (1..=(nvars - l) as i64).product();
        acc.scale(&BigRational::new(BigInt::one(), BigInt::from(fact)))
    }
}

#[cfg(test)]
mod tests {
    use super::variables::*;
    use super::*;
    use crate::partition::{part, partitions, staircase, strict};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn p(parts: &[usize]) -> PowerSumPoly {
        PowerSumPoly::power_sum(part(parts))
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn one_row_series() {
        assert_eq!(q_gen(0), PowerSumPoly::one());
        assert_eq!(q_gen(1), p(&[1]).scale(&rat(2)));
        assert_eq!(q_gen(2), p(&[1, 1]).scale(&rat(2)));
        let q3 = &p(&[1, 1, 1]).scale(&r(4, 3)) + &p(&[3]).scale(&r(2, 3));
        assert_eq!(q_gen(3), q3);
        assert_eq!(h_gen(2), &p(&[1, 1]).scale(&r(1, 2)) + &p(&[2]).scale(&r(1, 2)));
    }

    #[test]
    fn series_by_direct_exponential() {
        // expand exp(Σ c_k p_k u^k) term by term: Σ_ν ∏_k c_k^{m_k}/m_k! p_ν
        for n in 0..=8 {
            let mut h = PowerSumPoly::zero();
            let mut q = PowerSumPoly::zero();
            for nu in partitions(n) {
                let zinv = BigRational::new(BigInt::one(), z(&nu));
                h = &h + &PowerSumPoly::term(nu.clone(), zinv.clone());
                if nu.parts().iter().all(|k| k % 2 == 1) {
                    let w = BigRational::from_integer(BigInt::one() << nu.len());
                    q = &q + &PowerSumPoly::term(nu.clone(), zinv * w);
                }
            }
            assert_eq!(h_gen(n), h);
            assert_eq!(q_gen(n), q);
        }
    }

    #[test]
    fn small_schur_p() {
        assert_eq!(schur_p(&strict(&[1])), p(&[1]));
        let p3 = &p(&[1, 1, 1]).scale(&r(2, 3)) + &p(&[3]).scale(&r(1, 3));
        assert_eq!(schur_p(&strict(&[3])), p3);
        let p21 = &p(&[1, 1, 1]).scale(&r(1, 3)) - &p(&[3]).scale(&r(1, 3));
        assert_eq!(schur_p(&strict(&[2, 1])), p21);
        for n in 1..=10 {
            for a in strict_partitions(n) {
                assert!(schur_p(&a).is_gamma());
            }
        }
    }

    #[test]
    fn small_schur_s() {
        assert_eq!(schur_s(&part(&[3])), h_gen(3));
        let s11 = &p(&[1, 1]).scale(&r(1, 2)) - &p(&[2]).scale(&r(1, 2));
        assert_eq!(schur_s(&part(&[1, 1])), s11);
    }

    #[test]
    fn p_basis_expansions() {
        assert_eq!(
            expand_in_p(&p(&[1])).unwrap(),
            [(strict(&[1]), rat(1))].into_iter().collect()
        );
        for n in 1..=8 {
            for a in strict_partitions(n) {
                let e = expand_in_p(&schur_p(&a)).unwrap();
                assert_eq!(e, [(a.clone(), rat(1))].into_iter().collect());
            }
        }
        let e = expand_in_p(&p(&[1, 1, 1, 1])).unwrap();
        assert_eq!(e.len(), strict_partitions(4).len());
        assert!(e.values().all(|c| c.is_positive()));
        assert!(expand_in_p(&p(&[2])).is_err());
    }

    #[test]
    fn p_basis_is_nonsingular() {
        for n in 0..=16 {
            assert!(p_basis(n).is_ok(), "n={n}");
        }
    }

    fn random_antisymmetric(n: usize, rng: &mut StdRng) -> Vec<Vec<BigRational>> {
        let mut m = vec![vec![rat(0); n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let v = r(rng.gen_range(-9..=9), rng.gen_range(1..=4));
                m[j][i] = -v.clone();
                m[i][j] = v;
            }
        }
        m
    }

    #[test]
    fn pfaffians() {
        let a = r(5, 1);
        assert_eq!(pfaffian(&[vec![rat(0), a.clone()], vec![-a.clone(), rat(0)]]).unwrap(), a);
        let [a, b, c, d, e, f] = [2, 3, 5, 7, 11, 13].map(rat);
        let m = vec![
            vec![rat(0), a.clone(), b.clone(), c.clone()],
            vec![-a.clone(), rat(0), d.clone(), e.clone()],
            vec![-b.clone(), -d.clone(), rat(0), f.clone()],
            vec![-c.clone(), -e.clone(), -f.clone(), rat(0)],
        ];
        assert_eq!(pfaffian(&m).unwrap(), &a * &f - &b * &e + &c * &d);
        let mut rng = StdRng::seed_from_u64(3);
        for n in [2, 4, 6] {
            for _ in 0..5 {
                let m = random_antisymmetric(n, &mut rng);
                let pf = pfaffian(&m).unwrap();
                assert_eq!(&pf * &pf, det(&m).unwrap());
            }
        }
        assert!(pfaffian(&[vec![rat(0)]]).is_err());
        assert!(pfaffian(&[vec![rat(0), rat(1)], vec![rat(1), rat(0)]]).is_err());
    }

    #[test]
    fn determinant_and_inverse() {
        let m = vec![vec![rat(2), rat(1)], vec![rat(7), rat(4)]];
        assert_eq!(det(&m).unwrap(), rat(1));
        let inv = invert(m).unwrap();
        assert_eq!(inv, vec![vec![rat(4), rat(-1)], vec![rat(-7), rat(2)]]);
        assert!(invert(vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]]).is_err());
    }

    #[test]
    fn schur_p_matches_symmetrisation_in_four_variables() {
        let v = vandermonde(4);
        for n in 0..=6 {
            for a in strict_partitions(n) {
                let lhs = specialise(&schur_p(&a), 4).mul(&v);
                assert_eq!(lhs, vandermonde_times_schur_p(&a, 4), "{a}");
            }
        }
    }

    #[test]
    fn staircase_sum_identity() {
        for r1 in 0..=4 {
            for r2 in 0..=4 {
                let (s1, s2) = (staircase(r1), staircase(r2));
                if s1.size() + s2.size() > 12 {
                    continue;
                }
                let sum = StrictPartition::try_from(s1.add(&s2)).unwrap();
                assert_eq!(schur_p(&sum), &schur_s(&s1) * &schur_s(&s2), "{s1} {s2}");
            }
        }
    }

    #[test]
    fn hook_formula_from_schur() {
        for n in 1..=8 {
            let ones = part(&vec![1; n]);
            for l in partitions(n) {
                let f = schur_s(&l).coeff(&ones) * BigRational::from_integer(z(&ones));
                let hooks: BigInt = l.hook_lengths().iter().map(|&h| BigInt::from(h)).product();
                let nf: BigInt = (1..=n).map(BigInt::from).product();
                assert_eq!(f, BigRational::new(nf, hooks));
            }
        }
    }

    #[test]
    fn display() {
        let q = &p(&[1, 1, 1]).scale(&r(4, 3)) - &p(&[3]).scale(&r(2, 3));
        assert_eq!(q.to_string(), "-2/3·p[3] + 4/3·p[1,1,1]");
        assert_eq!(PowerSumPoly::one().to_string(), "1");
        assert_eq!(PowerSumPoly::zero().to_string(), "0");
    }
}
