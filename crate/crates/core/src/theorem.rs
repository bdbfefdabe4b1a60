//! Mechanical checks of every computational step behind "simple extensions of Artinian
//! Gorenstein algebras with the strong Lefschetz property keep it".
//!
//! In `B = A[x]/((a + x)^k)` every power of `x` reduces to `x^r = Σ_{j<k} c_{rj} a^{r-j} x^j`.
//! Multiplication by `x^q` on `B_t = ⊕_i A_{t-i} x^i` is then a block matrix `M` whose blocks are
//! `c_{q+i,j}` times powers of `a`; its rank is governed by a coefficient matrix that normalizes to
//! `(1/(r - i + j))`, a Cauchy matrix.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{GradedAlgebra, HomogeneousElement, MonicExtensionPoly};
use crate::error::{Error, Result};
use crate::field::{binomial_int, FieldSpec, Scalar};
use crate::lefschetz::{self, RankProfile, Verdict};
use crate::linalg::{anti_triangularize, cauchy_determinant, corner_minor, DenseMatrix};

fn q_int(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

fn q_scalar(x: BigRational) -> Scalar {
    Scalar::Rational(x)
}

/// Closed form of `c_{rj}` for the relation `(a + x)^k`.
pub fn c_coefficient(r: usize, j: usize, k: usize) -> Result<BigRational> {
    if k == 0 || j >= k {
        return Err(Error::InvalidArgument(format!(
            "coefficient index j = {j} outside [0, {k})"
        )));
    }
    if r < k {
        return Ok(if r == j {
            BigRational::one()
        } else {
            BigRational::zero()
        });
    }
    let (r, j, k) = (r as i64, j as i64, k as i64);
    let sign = if (r - k - 1).rem_euclid(2) == 0 { 1 } else { -1 };
    let numer = binomial_int(r, k) * binomial_int(k - 1, j) * k * sign;
    Ok(BigRational::new(numer, BigInt::from(r - j)))
}

/// Rows `c_{r0}, …, c_{r,k-1}` for `r = 0..=r_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTable {
    pub k: usize,
    pub rows: Vec<Vec<BigRational>>,
}

/// Build the table by literal rewriting: multiply `x^r` by `x` and replace `x^k` by
/// `-Σ_j binom(k, j) a^{k-j} x^j`, with `a` a formal symbol.
pub fn power_reduction_oracle(k: usize, r_max: usize) -> Result<ReductionTable> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let base: Vec<BigRational> = (0..k)
        .map(|j| q_int(binomial_int(k as i64, j as i64)))
        .collect();
    let mut rows = Vec::with_capacity(r_max + 1);
    let mut current: Vec<BigRational> = (0..k)
        .map(|j| if j == 0 { BigRational::one() } else { BigRational::zero() })
        .collect();
    for _ in 0..=r_max {
        rows.push(current.clone());
        let overflow = current[k - 1].clone();
        let mut next = vec![BigRational::zero(); k];
        for j in (1..k).rev() {
            next[j] = current[j - 1].clone();
        }
        for (j, b) in base.iter().enumerate() {
            next[j] -= &overflow * b;
        }
        current = next;
    }
    Ok(ReductionTable { k, rows })
}

/// `binom(r-j-1, r-k)·binom(r, j) = k/(r-j)·binom(r, k)·binom(k-1, j)`, evaluated exactly.
pub fn verify_binomial_identity(r: usize, j: usize, k: usize) -> bool {
    let (r, j, k) = (r as i64, j as i64, k as i64);
    let lhs = q_int(binomial_int(r - j - 1, r - k) * binomial_int(r, j));
    let rhs = BigRational::new(
        binomial_int(r, k) * binomial_int(k - 1, j) * k,
        BigInt::from(r - j),
    );
    lhs == rhs
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CoefficientSweep {
    pub checked: usize,
    pub identities_checked: usize,
    /// `(r, j, k)` where the closed form disagrees with the rewrite oracle.
    pub mismatches: Vec<(usize, usize, usize)>,
    /// `(r, j, k)` where the binomial identity fails.
    pub identity_failures: Vec<(usize, usize, usize)>,
}

impl CoefficientSweep {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.identity_failures.is_empty()
    }
}

/// Compare closed form and oracle for `1 <= k <= k_max`, `0 <= r <= r_max`, and check the
/// binomial identity wherever `r >= k`.
pub fn coefficient_sweep(k_max: usize, r_max: usize) -> CoefficientSweep {
    let mut sweep = CoefficientSweep::default();
    for k in 1..=k_max {
        let table = power_reduction_oracle(k, r_max).expect("k >= 1");
        for (r, row) in table.rows.iter().enumerate() {
            for (j, oracle) in row.iter().enumerate() {
                sweep.checked += 1;
                if c_coefficient(r, j, k).expect("j < k") != *oracle {
                    sweep.mismatches.push((r, j, k));
                }
                if r >= k {
                    sweep.identities_checked += 1;
                    if !verify_binomial_identity(r, j, k) {
                        sweep.identity_failures.push((r, j, k));
                    }
                }
            }
        }
    }
    sweep
}

fn c_in(field: FieldSpec, r: usize, j: usize, k: usize) -> Result<Scalar> {
    Scalar::from_rational(field, &c_coefficient(r, j, k)?)
}

/// `a^e·: A_src → A_{src+e}` scaled by `c`.
fn scaled_power_map(
    alg: &GradedAlgebra,
    powers: &[HomogeneousElement],
    c: &Scalar,
    exponent: usize,
    source: usize,
) -> Result<DenseMatrix> {
    Ok(alg.mult_map_matrix(&powers[exponent], source)?.scale(c))
}

fn powers_of(alg: &GradedAlgebra, a: &HomogeneousElement, n: usize) -> Result<Vec<HomogeneousElement>> {
    let mut out = vec![alg.one()];
    for _ in 0..n {
        out.push(alg.multiply(out.last().expect("nonempty"), a)?);
    }
    Ok(out)
}

fn dim_at(alg: &GradedAlgebra, t: i64) -> usize {
    if t < 0 {
        0
    } else {
        alg.dim(t as usize)
    }
}

/// The matrix `M` of `x^q·: B_t → B_{t+q}` on `B = A[x]/((a + x)^k)`, assembled from blocks
/// `c_{q+i,j}·(a^{q+i-j}·: A_{t-i} → A_{t+q-j})`. Block row `j` is the `x^j` component of the
/// target, block column `i` the `x^i` component of the source.
pub fn build_block_matrix(
    alg: &GradedAlgebra,
    a: &HomogeneousElement,
    k: usize,
    q: usize,
    t: usize,
) -> Result<DenseMatrix> {
    check_linear(a)?;
    if k == 0 || q == 0 {
        return Err(Error::InvalidArgument("k and q must be at least 1".into()));
    }
    let field = alg.field();
    let powers = powers_of(alg, a, q + k)?;
    let (t, q_i) = (t as i64, q as i64);
    let row_dims: Vec<usize> = (0..k).map(|j| dim_at(alg, t + q_i - j as i64)).collect();
    let col_dims: Vec<usize> = (0..k).map(|i| dim_at(alg, t - i as i64)).collect();
    let mut failure = None;
    let m = DenseMatrix::from_blocks(field, &row_dims, &col_dims, |j, i| {
        if row_dims[j] == 0 || col_dims[i] == 0 || q + i < j {
            return None;
        }
        let c = match c_in(field, q + i, j, k) {
            Ok(c) => c,
            Err(e) => {
                failure = Some(e);
                return None;
            }
        };
        if c.is_zero() {
            return None;
        }
        match scaled_power_map(alg, &powers, &c, q + i - j, (t - i as i64) as usize) {
            Ok(b) => Some(b),
            Err(e) => {
                failure = Some(e);
                None
            }
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(m),
    }
}

/// The block submatrix `N = (c_{q+j,i}·a^{q+j-i}·: A_{t-j} → A_{t+q-i})` with rows
/// `i = 0..s-1` and columns `j = r-q..k-1`, where `s = min(q, k)` and `r = max(q, k)`.
pub fn build_n_matrix(
    alg: &GradedAlgebra,
    a: &HomogeneousElement,
    k: usize,
    q: usize,
    t: usize,
) -> Result<DenseMatrix> {
    check_linear(a)?;
    let (s, r) = (q.min(k), q.max(k));
    let field = alg.field();
    let powers = powers_of(alg, a, q + k)?;
    let t = t as i64;
    let cols: Vec<usize> = (r - q..k).collect();
    let row_dims: Vec<usize> = (0..s).map(|i| dim_at(alg, t + q as i64 - i as i64)).collect();
    let col_dims: Vec<usize> = cols.iter().map(|&j| dim_at(alg, t - j as i64)).collect();
    let mut blocks: Vec<Vec<Option<DenseMatrix>>> = Vec::new();
    for (bi, i) in (0..s).enumerate() {
        let mut row = Vec::new();
        for (bj, &j) in cols.iter().enumerate() {
            if row_dims[bi] == 0 || col_dims[bj] == 0 {
                row.push(None);
                continue;
            }
            let c = c_in(field, q + j, i, k)?;
            row.push(Some(scaled_power_map(
                alg,
                &powers,
                &c,
                q + j - i,
                (t - j as i64) as usize,
            )?));
        }
        blocks.push(row);
    }
    DenseMatrix::from_blocks(field, &row_dims, &col_dims, |bi, bj| blocks[bi][bj].take())
}

/// Size of the identity part of `M = (0 N; id *)` when `q < k`: `Σ_{i<k-q} dim A_{t-i}`.
pub fn identity_block_size(alg: &GradedAlgebra, k: usize, q: usize, t: usize) -> usize {
    if q >= k {
        return 0;
    }
    (0..k - q).map(|i| dim_at(alg, t as i64 - i as i64)).sum()
}

fn check_linear(a: &HomogeneousElement) -> Result<()> {
    if a.degree() == 1 {
        Ok(())
    } else {
        Err(Error::DegreeMismatch(format!(
            "expected a linear element, got degree {}",
            a.degree()
        )))
    }
}

/// Rank of `x^q·: B_t → B_{t+q}` computed directly on `B = A[x]/((a + x)^k)`.
pub fn direct_block_rank(
    alg: &GradedAlgebra,
    a: &HomogeneousElement,
    k: usize,
    q: usize,
    t: usize,
) -> Result<usize> {
    let f = MonicExtensionPoly::shifted_power(alg, "x_new", a, k)?;
    let b = alg.extend_monic(&f)?;
    let x = b.variable(b.num_vars() - 1)?;
    let xq = b.pow(&x, q as u32)?;
    Ok(b.mult_map_matrix(&xq, t)?.rank())
}

/// The raw coefficient matrix `L = (c_{q+j,i})` and its normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientMatrix {
    pub raw: DenseMatrix,
    pub normalized: DenseMatrix,
}

/// `L` for given `q, k`, normalized by dividing column `j` by `(-1)^{q+j-k-1}·binom(q+j, k)·k`
/// and row `i` by `binom(k-1, i)`; the result is `(1/(r - i + c))_{i,c < s}`.
pub fn coefficient_matrix_l(q: usize, k: usize) -> Result<CoefficientMatrix> {
    if q == 0 || k == 0 {
        return Err(Error::InvalidArgument("q and k must be at least 1".into()));
    }
    let (s, r) = (q.min(k), q.max(k));
    let qq = FieldSpec::rationals();
    let mut raw_rows = Vec::with_capacity(s);
    let mut norm_rows = Vec::with_capacity(s);
    for i in 0..s {
        let mut raw = Vec::with_capacity(s);
        let mut norm = Vec::with_capacity(s);
        for j in r - q..k {
            let c = c_coefficient(q + j, i, k)?;
            let col = q + j;
            let sign: i64 = if (col as i64 - k as i64 - 1).rem_euclid(2) == 0 { 1 } else { -1 };
            let col_factor = q_int(binomial_int(col as i64, k as i64) * k * sign);
            let row_factor = q_int(binomial_int(k as i64 - 1, i as i64));
            norm.push(q_scalar(&c / col_factor / row_factor));
            raw.push(q_scalar(c));
        }
        raw_rows.push(raw);
        norm_rows.push(norm);
    }
    Ok(CoefficientMatrix {
        raw: DenseMatrix::from_rows(qq, raw_rows)?,
        normalized: DenseMatrix::from_rows(qq, norm_rows)?,
    })
}

/// `(1/(r - i + j))_{i, j < s}`, the expected normalized `L`.
pub fn reciprocal_matrix(r: usize, s: usize) -> DenseMatrix {
    let qq = FieldSpec::rationals();
    DenseMatrix::from_fn(qq, s, s, |i, j| {
        q_scalar(BigRational::new(BigInt::one(), BigInt::from(r + j - i)))
    })
}

/// `S = (1/(r - i + j))_{i,j=0..t}` evaluated two ways.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SMatrixCheck {
    pub r: usize,
    pub t: usize,
    pub determinant: Scalar,
    pub cauchy: Scalar,
    pub nonsingular: bool,
}

impl SMatrixCheck {
    pub fn consistent(&self) -> bool {
        self.determinant == self.cauchy
    }
}

pub fn s_matrix_nonsingular(r: usize, t: usize) -> Result<SMatrixCheck> {
    if r <= t {
        return Err(Error::InvalidArgument(format!(
            "S needs r > t (got r = {r}, t = {t})"
        )));
    }
    let qq = FieldSpec::rationals();
    let s = reciprocal_matrix(r, t + 1);
    let determinant = s.determinant()?;
    let u: Vec<Scalar> = (0..=t).map(|i| Scalar::from_i64(qq, (r - i) as i64)).collect();
    let v: Vec<Scalar> = (0..=t).map(|j| Scalar::from_i64(qq, j as i64)).collect();
    let cauchy = cauchy_determinant(&u, &v)?;
    Ok(SMatrixCheck {
        r,
        t,
        nonsingular: !determinant.is_zero(),
        determinant,
        cauchy,
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SMatrixSweep {
    pub checked: usize,
    /// `(r, t)` where the two determinants disagree or vanish.
    pub failures: Vec<(usize, usize)>,
}

impl SMatrixSweep {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// All `0 <= t < r <= r_max`.
pub fn smatrix_sweep(r_max: usize) -> SMatrixSweep {
    let mut sweep = SMatrixSweep::default();
    for r in 1..=r_max {
        for t in 0..r {
            sweep.checked += 1;
            let check = s_matrix_nonsingular(r, t).expect("t < r");
            if !check.consistent() || !check.nonsingular {
                sweep.failures.push((r, t));
            }
        }
    }
    sweep
}

/// Whether the normalized `L` for `(q, k)` can be brought to anti-triangular form by
/// column operations, checked both through the corner minors and by running the elimination.
pub fn l_is_anti_triangularizable(q: usize, k: usize) -> Result<bool> {
    let l = coefficient_matrix_l(q, k)?.normalized;
    let n = l.rows();
    let minors_ok = (1..=n)
        .map(|i| corner_minor(&l, i).determinant())
        .collect::<Result<Vec<_>>>()?
        .iter()
        .all(|d| !d.is_zero());
    let eliminated = anti_triangularize(&l)?.is_success();
    Ok(minors_ok && eliminated)
}

/// Both sides of the duality "f is Lefschetz for A[x]/(a - x) iff a - x is Lefschetz for
/// A[x]/(f)" on one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityCheck {
    /// `f(a)` is a Lefschetz element of `A`.
    pub lhs: bool,
    /// `a - x` is a Lefschetz element of `A[x]/(f)`.
    pub rhs: bool,
    pub agree: bool,
}

/// `f(a) = a^d + Σ a_i a^{d-i}` inside `A`.
pub fn evaluate_monic(
    alg: &GradedAlgebra,
    f: &MonicExtensionPoly,
    a: &HomogeneousElement,
) -> Result<HomogeneousElement> {
    let d = f.degree();
    let powers = powers_of(alg, a, d)?;
    let mut acc = powers[d].clone();
    for (i, coeff) in f.lower.iter().enumerate() {
        let term = alg.multiply(coeff, &powers[d - i - 1])?;
        acc = alg.add(&acc, &term)?;
    }
    Ok(acc)
}

pub fn verify_duality_instance(
    alg: &GradedAlgebra,
    f: &MonicExtensionPoly,
    a: &HomogeneousElement,
) -> Result<DualityCheck> {
    check_linear(a)?;
    let fa = evaluate_monic(alg, f, a)?;
    let (lhs, _) = lefschetz::is_lefschetz(alg, &fa)?;
    let b = alg.extend_monic(f)?;
    let x = b.variable(b.num_vars() - 1)?;
    let g = b.sub(&b.include(a)?, &x)?;
    let (rhs, _) = lefschetz::is_lefschetz(&b, &g)?;
    Ok(DualityCheck {
        lhs,
        rhs,
        agree: lhs == rhs,
    })
}

/// Random tower of depth `1..=max_depth` over `field` with socle degree at most `max_sigma`.
/// Relation degrees are in `2..=4`; each lower coefficient is random with probability 2/3.
pub fn random_tower<R: Rng + ?Sized>(
    field: FieldSpec,
    max_depth: usize,
    max_sigma: usize,
    rng: &mut R,
) -> Result<GradedAlgebra> {
    let depth = rng.random_range(1..=max_depth.max(1));
    let mut alg = GradedAlgebra::trivial(field);
    for v in 0..depth {
        let room = max_sigma.saturating_sub(alg.sigma());
        if room == 0 {
            break;
        }
        let d = rng.random_range(2..=4usize.min(room + 1));
        let f = random_monic(&alg, &format!("x{}", v + 1), d, rng)?;
        alg = alg.extend_monic(&f)?;
    }
    Ok(alg)
}

/// Random monic `x^d + Σ a_i x^{d-i}` over `alg`.
pub fn random_monic<R: Rng + ?Sized>(
    alg: &GradedAlgebra,
    var: &str,
    d: usize,
    rng: &mut R,
) -> Result<MonicExtensionPoly> {
    let lower = (1..=d)
        .map(|i| {
            if alg.dim(i) > 0 && rng.random_range(0..3) > 0 {
                alg.random_homogeneous(i, rng)
            } else {
                Ok(alg.zero(i))
            }
        })
        .collect::<Result<_>>()?;
    Ok(MonicExtensionPoly::new(var, lower))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DualitySweep {
    pub instances: usize,
    pub lhs_true: usize,
    pub disagreements: Vec<usize>,
}

impl DualitySweep {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Random instances with tower depth at most 2 and `σ <= 8`.
pub fn duality_sweep(instances: usize, seed: u64) -> Result<DualitySweep> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sweep = DualitySweep::default();
    for n in 0..instances {
        let a = random_tower(FieldSpec::rationals(), 1, 5, &mut rng)?;
        let d = rng.random_range(1..=(8 - a.sigma()).min(4));
        let f = random_monic(&a, "x", d, &mut rng)?;
        // Odd instances use a single tower variable.
        let elem = if n % 2 == 1 {
            a.variable(rng.random_range(0..a.num_vars()))?
        } else {
            a.random_homogeneous(1, &mut rng)?
        };
        let check = verify_duality_instance(&a, &f, &elem)?;
        sweep.instances += 1;
        sweep.lhs_true += usize::from(check.lhs);
        if !check.agree {
            sweep.disagreements.push(n);
        }
    }
    Ok(sweep)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockCase {
    pub hilbert: Vec<usize>,
    pub k: usize,
    pub q: usize,
    pub t: usize,
    pub block_rank: usize,
    pub direct_rank: usize,
    pub n_rank: usize,
    pub identity_size: usize,
}

impl BlockCase {
    pub fn consistent(&self) -> bool {
        self.block_rank == self.direct_rank && self.block_rank == self.n_rank + self.identity_size
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BlockSweep {
    pub cases: usize,
    pub failures: Vec<BlockCase>,
    /// `(q, k)` pairs whose normalized coefficient matrix failed to anti-triangularize.
    pub l_failures: Vec<(usize, usize)>,
}

impl BlockSweep {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.l_failures.is_empty()
    }
}

/// One block-matrix case.
pub fn block_case(
    alg: &GradedAlgebra,
    a: &HomogeneousElement,
    k: usize,
    q: usize,
    t: usize,
) -> Result<BlockCase> {
    Ok(BlockCase {
        hilbert: alg.hilbert_function(),
        k,
        q,
        t,
        block_rank: build_block_matrix(alg, a, k, q, t)?.rank(),
        direct_rank: direct_block_rank(alg, a, k, q, t)?,
        n_rank: build_n_matrix(alg, a, k, q, t)?.rank(),
        identity_size: identity_block_size(alg, k, q, t),
    })
}

/// `k <= 3`, `q <= 4`, every `t <= σ_B` over a handful of small towers with random linear `a`.
pub fn blockmatrix_sweep(seed: u64) -> Result<BlockSweep> {
    let qq = FieldSpec::rationals();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut algebras = Vec::new();
    for exps in [&[2][..], &[3], &[2, 2], &[3, 2], &[2, 2, 2]] {
        algebras.push(GradedAlgebra::monomial_complete_intersection(qq, exps)?);
    }
    for _ in 0..2 {
        algebras.push(random_tower(qq, 2, 4, &mut rng)?);
    }
    let mut sweep = BlockSweep::default();
    for k in 1..=3 {
        for q in 1..=4 {
            if !l_is_anti_triangularizable(q, k)? {
                sweep.l_failures.push((q, k));
            }
        }
    }
    for alg in &algebras {
        if alg.dim(1) == 0 {
            continue;
        }
        let a = alg.random_homogeneous(1, &mut rng)?;
        for k in 1..=3 {
            let sigma_b = alg.sigma() + k - 1;
            for q in 1..=4 {
                for t in 0..=sigma_b {
                    let case = block_case(alg, &a, k, q, t)?;
                    sweep.cases += 1;
                    if !case.consistent() {
                        sweep.failures.push(case);
                    }
                }
            }
        }
    }
    Ok(sweep)
}

/// A nonzero `c` with `f_c(l)` Lefschetz, where `f_c = y^d + Σ c^i a_i y^{d-i}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScalingCertificate {
    pub c: Scalar,
    pub candidates_tried: usize,
    pub profile: RankProfile,
}

/// Enumerate `c = 1, 2, …` (at most `e(A) + 1` candidates) until `f_c(l)` is Lefschetz; checks
/// `c^d·f(l/c) = f_c(l)` exactly for every candidate.
pub fn find_scaling(
    alg: &GradedAlgebra,
    l: &HomogeneousElement,
    f: &MonicExtensionPoly,
) -> Result<ScalingCertificate> {
    check_linear(l)?;
    let field = alg.field();
    let d = f.degree();
    let bound = alg.multiplicity() + 1;
    for n in 1..=bound {
        let c = Scalar::from_i64(field, n as i64);
        if c.is_zero() {
            continue;
        }
        let scaled = MonicExtensionPoly::new(
            f.var.clone(),
            f.lower
                .iter()
                .enumerate()
                .map(|(i, a)| alg.scale(&c.pow(i as u32 + 1), a))
                .collect::<Result<_>>()?,
        );
        let fc_l = evaluate_monic(alg, &scaled, l)?;
        let l_over_c = alg.scale(&c.inv()?, l)?;
        let f_l_over_c = evaluate_monic(alg, f, &l_over_c)?;
        if alg.scale(&c.pow(d as u32), &f_l_over_c)? != fc_l {
            return Err(Error::InvalidArgument(format!(
                "scaling identity failed at c = {c}"
            )));
        }
        let (ok, profile) = lefschetz::is_lefschetz(alg, &fc_l)?;
        if ok {
            return Ok(ScalingCertificate {
                c,
                candidates_tried: n,
                profile,
            });
        }
    }
    Err(Error::ScalingSearchFailed(bound))
}

/// Sufficient characteristic for `A[x]/(f)` to keep the strong Lefschetz property:
/// `2q + σ - 1` when `f = x^q`, otherwise `max(e(A), 2q + σ - 1)`.
pub fn char_bound(q: usize, sigma: usize, e: usize, pure_power: bool) -> usize {
    let base = (2 * q + sigma).saturating_sub(1);
    if pure_power {
        base
    } else {
        base.max(e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MapClass {
    Injective,
    Surjective,
    Both,
}

impl MapClass {
    fn name(self) -> &'static str {
        match self {
            MapClass::Injective => "injective",
            MapClass::Surjective => "surjective",
            MapClass::Both => "bijective",
        }
    }
}

/// Predict `l^{j-i}·: A_i → A_j` from `i <= σ - j` (injective) / `i >= σ - j` (surjective), then
/// confirm the prediction with the exact rank. Returns the observed class.
pub fn classify_injective_surjective(
    alg: &GradedAlgebra,
    l: &HomogeneousElement,
    i: usize,
    j: usize,
) -> Result<MapClass> {
    check_linear(l)?;
    if i >= j {
        return Err(Error::InvalidArgument(format!("need i < j, got i = {i}, j = {j}")));
    }
    let bound = alg.sigma() as i64 - j as i64;
    let predicted = match (i as i64).cmp(&bound) {
        std::cmp::Ordering::Less => MapClass::Injective,
        std::cmp::Ordering::Greater => MapClass::Surjective,
        std::cmp::Ordering::Equal => MapClass::Both,
    };
    let power = alg.pow(l, (j - i) as u32)?;
    let rank = alg.mult_map_matrix(&power, i)?.rank();
    let (source_dim, target_dim) = (alg.dim(i), alg.dim(j));
    let injective = rank == source_dim;
    let surjective = rank == target_dim;
    let holds = match predicted {
        MapClass::Injective => injective,
        MapClass::Surjective => surjective,
        MapClass::Both => injective && surjective,
    };
    if !holds {
        return Err(Error::ClassificationMismatch {
            i,
            j,
            predicted: predicted.name(),
            rank,
            source_dim,
            target_dim,
        });
    }
    Ok(match (injective, surjective) {
        (true, true) => MapClass::Both,
        (true, false) => MapClass::Injective,
        _ => MapClass::Surjective,
    })
}

/// Exact proof that `l^r·: A_i → A_{i+r}` is neither injective nor surjective.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DisproofCertificate {
    pub power: u32,
    pub degree: usize,
    pub source_dim: usize,
    /// `dim C_{i+r}` for `C = A/(l^r)`.
    pub quotient_dim: usize,
    pub target_dim: usize,
    /// Forced by the dimensions: `dim A_{i+r} - dim C_{i+r}`.
    pub rank: usize,
    pub quotient_hilbert: Vec<usize>,
}

/// Emits a certificate when `dim A_i + dim C_{i+r} > dim A_{i+r}` and `dim C_{i+r} > 0`.
pub fn certified_slp_disproof(
    alg: &GradedAlgebra,
    l: &HomogeneousElement,
    r: u32,
    i: usize,
) -> Result<Option<DisproofCertificate>> {
    let lr = alg.pow(l, r)?;
    let quotient = if lr.is_zero() {
        alg.clone()
    } else {
        alg.quotient_by_form(&lr)?
    };
    let target = i + lr.degree();
    let (source_dim, target_dim) = (alg.dim(i), alg.dim(target));
    let quotient_dim = quotient.dim(target);
    if source_dim + quotient_dim > target_dim && quotient_dim > 0 {
        Ok(Some(DisproofCertificate {
            power: r,
            degree: i,
            source_dim,
            quotient_dim,
            target_dim,
            rank: target_dim - quotient_dim,
            quotient_hilbert: quotient.hilbert_function(),
        }))
    } else {
        Ok(None)
    }
}

/// Every nonzero linear form up to scaling (first nonzero coordinate 1) over a finite field.
pub fn projective_linear_forms(alg: &GradedAlgebra) -> Result<Vec<HomogeneousElement>> {
    let field = alg.field();
    let p = field
        .modulus()
        .ok_or_else(|| Error::InvalidArgument("enumeration needs a finite field".into()))?;
    let n = alg.dim(1);
    let total = (p as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if total > 1 << 20 {
        return Err(Error::InvalidArgument(format!(
            "{total} linear forms are too many to enumerate"
        )));
    }
    let mut out = Vec::new();
    for code in 1..total as u64 {
        let digits: Vec<u64> = (0..n).map(|k| code / p.pow(k as u32) % p).collect();
        if digits.iter().find(|&&x| x != 0) != Some(&1) {
            continue;
        }
        let coeffs = digits
            .iter()
            .map(|&x| Scalar::from_i64(field, x as i64))
            .collect();
        out.push(alg.element(1, coeffs)?);
    }
    Ok(out)
}

/// Result of checking one linear form exhaustively.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExhaustiveCase {
    pub element: String,
    pub strong: bool,
    pub disproof: Option<DisproofCertificate>,
}

/// Check every projective linear form; a form that is not strong Lefschetz gets a dimension
/// certificate at its first non-maximal map.
pub fn exhaustive_strong_check(alg: &GradedAlgebra) -> Result<Vec<ExhaustiveCase>> {
    projective_linear_forms(alg)?
        .into_iter()
        .map(|l| {
            let (strong, profiles) = lefschetz::is_strong_lefschetz(alg, &l)?;
            let witness = profiles.iter().find_map(|p| {
                p.first_failure().map(|row| (p.power, row.degree))
            });
            let disproof = match witness {
                Some((r, i)) => certified_slp_disproof(alg, &l, r, i)?,
                None => None,
            };
            Ok(ExhaustiveCase {
                element: alg.format_element(&l),
                strong,
                disproof,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StanleyCase {
    pub exponents: Vec<usize>,
    pub multiplicity: usize,
    pub verdict: Verdict,
    pub trials_used: usize,
}

/// Exponent vectors `2 <= a_1 <= … <= a_n` with `n <= max_vars` and `∏ a_i <= dim_cap`.
pub fn monomial_ci_exponents(max_vars: usize, dim_cap: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, min: usize, product: usize, max_vars: usize, cap: usize, out: &mut Vec<Vec<usize>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        if prefix.len() == max_vars {
            return;
        }
        let mut a = min;
        while product * a <= cap {
            prefix.push(a);
            go(prefix, a, product * a, max_vars, cap, out);
            prefix.pop();
            a += 1;
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), 2, 1, max_vars, dim_cap, &mut out);
    out
}

/// Strong Lefschetz search on every monomial complete intersection in the corpus.
pub fn stanley_sweep(
    field: FieldSpec,
    max_vars: usize,
    dim_cap: usize,
    trials: usize,
    seed: u64,
) -> Result<Vec<StanleyCase>> {
    monomial_ci_exponents(max_vars, dim_cap)
        .into_iter()
        .map(|exponents| {
            let alg = GradedAlgebra::monomial_complete_intersection(field, &exponents)?;
            let report = lefschetz::search_strong(&alg, trials, seed)?;
            Ok(StanleyCase {
                multiplicity: alg.multiplicity(),
                exponents,
                verdict: report.verdict,
                trials_used: report.trials_used,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionCase {
    pub base_hilbert: Vec<usize>,
    pub hilbert: Vec<usize>,
    pub verdict: Verdict,
    pub trials_used: usize,
}

/// Random towers `A` followed by a random monic extension `B = A[x]/(f)` (total depth at most
/// `max_depth`, `σ_B <= max_sigma`), each searched for a strong Lefschetz element.
pub fn extension_spot_checks(
    field: FieldSpec,
    count: usize,
    max_depth: usize,
    max_sigma: usize,
    trials: usize,
    seed: u64,
) -> Result<Vec<ExtensionCase>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let a = random_tower(field, max_depth.saturating_sub(1).max(1), max_sigma - 1, &mut rng)?;
            let room = max_sigma - a.sigma();
            let d = rng.random_range(2..=(room + 1).min(4));
            let f = random_monic(&a, "y", d, &mut rng)?;
            let b = a.extend_monic(&f)?;
            let report = lefschetz::search_strong(&b, trials, rng.random())?;
            Ok(ExtensionCase {
                base_hilbert: a.hilbert_function(),
                hilbert: b.hilbert_function(),
                verdict: report.verdict,
                trials_used: report.trials_used,
            })
        })
        .collect()
}

/// `K[x1..x5]/(x1^4, x2^4, x3^4, x4^4, x5^2)`: Gorenstein with the strong Lefschetz property,
/// `e = 512`, `σ = 13`.
pub fn counterexample_ambient(field: FieldSpec) -> Result<GradedAlgebra> {
    GradedAlgebra::monomial_complete_intersection(field, &[4, 4, 4, 4, 2])
}

/// The ambient algebra modulo a seeded random form of degree 8. Its Hilbert function is
/// `1 5 14 30 51 71 84 84 70 46 16` for a generic form.
pub fn counterexample_algebra(field: FieldSpec, seed: u64) -> Result<GradedAlgebra> {
    counterexample_ambient(field)?.quotient_by_random_form(8, seed)
}

/// `(K[x1..x4]/(x1^4, …, x4^4, g)) ⊗ K[x5]/(x5^2)` for a seeded random `g` of degree 8 free of
/// `x5`. Same Hilbert function as [`counterexample_algebra`], but `b^9·: B_1 → B_10` drops rank
/// for every linear `b`.
pub fn split_counterexample_algebra(field: FieldSpec, seed: u64) -> Result<GradedAlgebra> {
    let front = GradedAlgebra::monomial_complete_intersection(field, &[4, 4, 4, 4])?
        .quotient_by_random_form(8, seed)?;
    front.extend_monic(&MonicExtensionPoly::pure_power(&front, "x5", 2))
}

/// A seeded random linear `b` of the counterexample algebra and the dimension certificate that
/// `b^9·: B_1 → B_10` is neither injective nor surjective.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleDisproof {
    pub element: String,
    /// Hilbert function of `C = B/(b^9)`.
    pub quotient_hilbert: Vec<usize>,
    /// Rank of `b^9·: B_1 → B_10`.
    pub rank: usize,
    pub certificate: Option<DisproofCertificate>,
}

pub fn counterexample_disproof(b: &GradedAlgebra, seed: u64) -> Result<CounterexampleDisproof> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let l = b.random_homogeneous(1, &mut rng)?;
    let l9 = b.pow(&l, 9)?;
    let quotient = if l9.is_zero() {
        b.clone()
    } else {
        b.quotient_by_form(&l9)?
    };
    Ok(CounterexampleDisproof {
        element: b.format_element(&l),
        quotient_hilbert: quotient.hilbert_function(),
        rank: b.mult_map_matrix(&l9, 1)?.rank(),
        certificate: certified_slp_disproof(b, &l, 9, 1)?,
    })
}
