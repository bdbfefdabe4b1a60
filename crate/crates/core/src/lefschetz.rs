//! Rank profiles of multiplication maps and Lefschetz certification.
//!
//! Lefschetz elements form a Zariski open set, so a single element with maximal-rank profiles
//! certifies the property. A random search that finds none only proves nothing; its verdict is
//! [`Verdict::SearchInconclusive`], never a disproof.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{GradedAlgebra, HomogeneousElement};
use crate::error::{Error, Result};
use crate::field::FieldSpec;

/// Default number of random elements tried by the searches.
pub const DEFAULT_TRIALS: usize = 8;

/// One map `w^r·: A_i → A_{i + r·deg w}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileRow {
    pub degree: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub is_maximal: bool,
}

impl ProfileRow {
    pub fn injective(&self) -> bool {
        self.rank == self.source_dim
    }

    pub fn surjective(&self) -> bool {
        self.rank == self.target_dim
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankProfile {
    pub element_degree: usize,
    pub power: u32,
    pub rows: Vec<ProfileRow>,
}

impl RankProfile {
    pub fn is_maximal(&self) -> bool {
        self.rows.iter().all(|r| r.is_maximal)
    }

    pub fn first_failure(&self) -> Option<&ProfileRow> {
        self.rows.iter().find(|r| !r.is_maximal)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    CertifiedSuccess,
    ElementFailure,
    SearchInconclusive,
}

/// A concrete non-maximal map: power `r` of the element acting on degree `degree`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Witness {
    pub power: u32,
    pub degree: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Weak,
    Strong,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LefschetzReport {
    pub fingerprint: String,
    pub field: FieldSpec,
    pub mode: Mode,
    /// The element that was tested (or the best one seen by an inconclusive search).
    pub element: String,
    pub seed: Option<u64>,
    pub powers: Vec<u32>,
    pub profiles: Vec<RankProfile>,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// First failure of every sampled element, in sampling order.
    pub failures: Vec<Witness>,
    pub trials_used: usize,
    /// Over GF(p) the openness argument only makes random success likely, not certain.
    pub probabilistic: bool,
}

/// Profile of `w^r·: A_i → A_{i + r·deg w}` for `0 <= i <= σ`.
pub fn rank_profile(alg: &GradedAlgebra, w: &HomogeneousElement, r: u32) -> Result<RankProfile> {
    if r == 0 {
        return Err(Error::InvalidArgument("power must be at least 1".into()));
    }
    let wr = alg.pow(w, r)?;
    profile_of(alg, &wr, w.degree(), r)
}

fn profile_of(
    alg: &GradedAlgebra,
    wr: &HomogeneousElement,
    element_degree: usize,
    power: u32,
) -> Result<RankProfile> {
    let rows = (0..=alg.sigma())
        .map(|i| profile_row(alg, wr, i))
        .collect::<Result<_>>()?;
    Ok(RankProfile {
        element_degree,
        power,
        rows,
    })
}

fn profile_row(alg: &GradedAlgebra, w: &HomogeneousElement, i: usize) -> Result<ProfileRow> {
    let m = alg.mult_map_matrix(w, i)?;
    let (source_dim, target_dim) = (m.cols(), m.rows());
    let rank = m.rank();
    Ok(ProfileRow {
        degree: i,
        source_dim,
        target_dim,
        rank,
        is_maximal: rank == source_dim.min(target_dim),
    })
}

/// Whether `w` (of positive degree) is a Lefschetz element.
pub fn is_lefschetz(alg: &GradedAlgebra, w: &HomogeneousElement) -> Result<(bool, RankProfile)> {
    if w.degree() == 0 {
        return Err(Error::InvalidArgument(
            "Lefschetz elements have positive degree".into(),
        ));
    }
    let profile = profile_of(alg, w, w.degree(), 1)?;
    Ok((profile.is_maximal(), profile))
}

/// Whether every power `l^r`, `1 <= r <= σ`, is Lefschetz. Higher powers act between zero spaces.
pub fn is_strong_lefschetz(
    alg: &GradedAlgebra,
    l: &HomogeneousElement,
) -> Result<(bool, Vec<RankProfile>)> {
    let profiles = strong_profiles(alg, l, false)?;
    Ok((profiles.iter().all(RankProfile::is_maximal), profiles))
}

/// Profiles of `l, l^2, …, l^σ`, optionally stopping after the first non-maximal one.
fn strong_profiles(
    alg: &GradedAlgebra,
    l: &HomogeneousElement,
    stop_early: bool,
) -> Result<Vec<RankProfile>> {
    if l.degree() != 1 {
        return Err(Error::DegreeMismatch(format!(
            "strong Lefschetz elements are linear, got degree {}",
            l.degree()
        )));
    }
    let mut profiles = Vec::new();
    let mut power = alg.one();
    for r in 1..=alg.sigma() as u32 {
        power = alg.multiply(&power, l)?;
        let profile = profile_of(alg, &power, 1, r)?;
        let done = stop_early && !profile.is_maximal();
        profiles.push(profile);
        if done {
            break;
        }
    }
    Ok(profiles)
}

fn first_witness(profiles: &[RankProfile]) -> Option<Witness> {
    profiles.iter().find_map(|p| {
        p.first_failure().map(|row| Witness {
            power: p.power,
            degree: row.degree,
        })
    })
}

fn element_profiles(
    alg: &GradedAlgebra,
    l: &HomogeneousElement,
    mode: Mode,
    stop_early: bool,
) -> Result<Vec<RankProfile>> {
    match mode {
        Mode::Weak => Ok(vec![is_lefschetz(alg, l)?.1]),
        Mode::Strong => strong_profiles(alg, l, stop_early),
    }
}

/// Certify or refute one specific linear element.
pub fn check_element(
    alg: &GradedAlgebra,
    l: &HomogeneousElement,
    mode: Mode,
) -> Result<LefschetzReport> {
    let profiles = element_profiles(alg, l, mode, false)?;
    let witness = first_witness(&profiles);
    Ok(LefschetzReport {
        fingerprint: alg.fingerprint(),
        field: alg.field(),
        mode,
        element: alg.format_element(l),
        seed: None,
        powers: profiles.iter().map(|p| p.power).collect(),
        profiles,
        verdict: if witness.is_none() {
            Verdict::CertifiedSuccess
        } else {
            Verdict::ElementFailure
        },
        witness,
        failures: witness.into_iter().collect(),
        trials_used: 1,
        probabilistic: !alg.field().is_rationals(),
    })
}

/// Sample random linear forms until one is (strong) Lefschetz.
pub fn search(alg: &GradedAlgebra, mode: Mode, trials: usize, seed: u64) -> Result<LefschetzReport> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    if alg.dim(1) == 0 && alg.sigma() > 0 {
        return Err(Error::NoLinearForms(alg.sigma()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut best: Option<(Witness, HomogeneousElement, Vec<RankProfile>)> = None;
    for trial in 1..=trials {
        let l = if alg.dim(1) == 0 {
            alg.zero(1)
        } else {
            alg.random_homogeneous(1, &mut rng)?
        };
        let profiles = element_profiles(alg, &l, mode, true)?;
        match first_witness(&profiles) {
            None => {
                return Ok(LefschetzReport {
                    fingerprint: alg.fingerprint(),
                    field: alg.field(),
                    mode,
                    element: alg.format_element(&l),
                    seed: Some(seed),
                    powers: profiles.iter().map(|p| p.power).collect(),
                    profiles,
                    verdict: Verdict::CertifiedSuccess,
                    witness: None,
                    failures,
                    trials_used: trial,
                    probabilistic: !alg.field().is_rationals(),
                });
            }
            Some(w) => {
                failures.push(w);
                if best.as_ref().is_none_or(|(b, _, _)| w > *b) {
                    best = Some((w, l, profiles));
                }
            }
        }
    }
    let (witness, l, profiles) = best.expect("at least one trial ran");
    Ok(LefschetzReport {
        fingerprint: alg.fingerprint(),
        field: alg.field(),
        mode,
        element: alg.format_element(&l),
        seed: Some(seed),
        powers: profiles.iter().map(|p| p.power).collect(),
        profiles,
        verdict: Verdict::SearchInconclusive,
        witness: Some(witness),
        failures,
        trials_used: trials,
        probabilistic: !alg.field().is_rationals(),
    })
}

pub fn search_weak(alg: &GradedAlgebra, trials: usize, seed: u64) -> Result<LefschetzReport> {
    search(alg, Mode::Weak, trials, seed)
}

pub fn search_strong(alg: &GradedAlgebra, trials: usize, seed: u64) -> Result<LefschetzReport> {
    search(alg, Mode::Strong, trials, seed)
}

/// Verdict for random forms of one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeVerdict {
    pub degree: usize,
    pub verdict: Verdict,
    pub trials_used: usize,
    /// Source degree of the first non-maximal map of the last failing form, if any.
    pub failures: Vec<usize>,
    pub profile: RankProfile,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaximalRankReport {
    pub fingerprint: String,
    pub field: FieldSpec,
    pub seed: u64,
    pub degrees: Vec<DegreeVerdict>,
    pub probabilistic: bool,
}

impl MaximalRankReport {
    pub fn all_certified(&self) -> bool {
        self.degrees
            .iter()
            .all(|d| d.verdict == Verdict::CertifiedSuccess)
    }
}

/// For each `d = 1..σ`, look for a form of degree `d` all of whose multiplication maps have
/// maximal rank.
pub fn maximal_rank_property(
    alg: &GradedAlgebra,
    trials: usize,
    seed: u64,
) -> Result<MaximalRankReport> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut degrees = Vec::new();
    for d in 1..=alg.sigma() {
        let mut failures = Vec::new();
        let mut last = None;
        let mut verdict = Verdict::SearchInconclusive;
        let mut used = 0;
        for _ in 0..trials {
            used += 1;
            let f = alg.random_homogeneous(d, &mut rng)?;
            let (ok, profile) = is_lefschetz(alg, &f)?;
            if let Some(row) = profile.first_failure() {
                failures.push(row.degree);
            }
            last = Some(profile);
            if ok {
                verdict = Verdict::CertifiedSuccess;
                break;
            }
        }
        degrees.push(DegreeVerdict {
            degree: d,
            verdict,
            trials_used: used,
            failures,
            profile: last.expect("at least one trial ran"),
        });
    }
    Ok(MaximalRankReport {
        fingerprint: alg.fingerprint(),
        field: alg.field(),
        seed,
        degrees,
        probabilistic: !alg.field().is_rationals(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Scalar;
    use proptest::prelude::*;

    fn qq() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn mci(field: FieldSpec, exps: &[usize]) -> GradedAlgebra {
        GradedAlgebra::monomial_complete_intersection(field, exps).unwrap()
    }

    fn x_plus_y(a: &GradedAlgebra) -> HomogeneousElement {
        a.add(&a.variable(0).unwrap(), &a.variable(1).unwrap()).unwrap()
    }

    #[test]
    fn profile_of_square() {
        let a = mci(qq(), &[2, 2]);
        let p = rank_profile(&a, &x_plus_y(&a), 2).unwrap();
        assert_eq!(
            p.rows[0],
            ProfileRow {
                degree: 0,
                source_dim: 1,
                target_dim: 1,
                rank: 1,
                is_maximal: true
            }
        );
        let gf2 = FieldSpec::prime(2).unwrap();
        let a = mci(gf2, &[2, 2]);
        let p = rank_profile(&a, &x_plus_y(&a), 2).unwrap();
        assert_eq!((p.rows[0].rank, p.rows[0].is_maximal), (0, false));
    }

    #[test]
    fn zero_element_profile() {
        let a = mci(qq(), &[3, 2]);
        for r in 1..4 {
            let p = rank_profile(&a, &a.zero(1), r).unwrap();
            for row in &p.rows {
                assert_eq!(row.rank, 0);
                assert_eq!(row.is_maximal, row.source_dim == 0 || row.target_dim == 0);
            }
        }
    }

    #[test]
    fn weak_examples() {
        let a = mci(qq(), &[5]);
        assert!(is_lefschetz(&a, &a.variable(0).unwrap()).unwrap().0);
        // Brute force: x·A_0 → A_1 has rank 1 = min(1,2), x·A_1 → A_2 has rank 1 = min(2,1).
        let a = mci(qq(), &[2, 2]);
        let x = a.variable(0).unwrap();
        let (ok, profile) = is_lefschetz(&a, &x).unwrap();
        assert!(ok);
        assert_eq!(
            profile.rows.iter().map(|r| r.rank).collect::<Vec<_>>(),
            vec![1, 1, 0]
        );
        let (strong, profiles) = is_strong_lefschetz(&a, &x).unwrap();
        assert!(!strong);
        assert!(!profiles[1].rows[0].is_maximal);
        assert!(is_lefschetz(&a, &a.one()).is_err());
    }

    #[test]
    fn strong_examples() {
        for n in 1..=20 {
            let a = mci(qq(), &[n]);
            assert!(is_strong_lefschetz(&a, &a.variable(0).unwrap()).unwrap().0, "n = {n}");
        }
        let a = mci(qq(), &[2, 2]);
        assert!(is_strong_lefschetz(&a, &x_plus_y(&a)).unwrap().0);
        let a = mci(FieldSpec::prime(2).unwrap(), &[2, 2]);
        let (ok, profiles) = is_strong_lefschetz(&a, &x_plus_y(&a)).unwrap();
        assert!(!ok);
        assert_eq!(first_witness(&profiles), Some(Witness { power: 2, degree: 0 }));
    }

    #[test]
    fn stanley_algebra_search() {
        let a = mci(qq(), &[2, 2, 2]);
        let report = search_strong(&a, 5, 0).unwrap();
        assert_eq!(report.verdict, Verdict::CertifiedSuccess);
        assert!(!report.probabilistic);
        let weak = search_weak(&a, 5, 0).unwrap();
        assert_eq!(weak.verdict, Verdict::CertifiedSuccess);
    }

    #[test]
    fn search_needs_linear_forms() {
        let a = mci(qq(), &[2]);
        let x = a.variable(0).unwrap();
        // Killing x leaves K; searching still succeeds vacuously.
        let k = a.quotient_by_form(&x).unwrap();
        assert_eq!(search_strong(&k, 1, 0).unwrap().verdict, Verdict::CertifiedSuccess);
        assert!(search_strong(&a, 0, 0).is_err());
    }

    #[test]
    fn search_is_reproducible() {
        let a = mci(qq(), &[3, 2, 2]);
        assert_eq!(search_strong(&a, 8, 17).unwrap(), search_strong(&a, 8, 17).unwrap());
    }

    #[test]
    fn gf2_search_is_inconclusive() {
        let a = mci(FieldSpec::prime(2).unwrap(), &[2, 2]);
        let report = search_strong(&a, 6, 3).unwrap();
        assert_eq!(report.verdict, Verdict::SearchInconclusive);
        assert_eq!(report.failures.len(), 6);
        assert!(report.probabilistic);
    }

    #[test]
    fn maximal_rank_small() {
        let a = mci(qq(), &[2, 2]);
        let report = maximal_rank_property(&a, 8, 1).unwrap();
        assert!(report.all_certified());
        assert_eq!(report.degrees.len(), 2);
        // Degree σ forms map A_0 onto A_σ and everything else to zero spaces.
        let a = mci(qq(), &[3, 3, 2]);
        let report = maximal_rank_property(&a, 8, 1).unwrap();
        let top = report.degrees.last().unwrap();
        assert_eq!(top.degree, a.sigma());
        assert_eq!(top.verdict, Verdict::CertifiedSuccess);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn scaling_preserves_strongness(seed in any::<u64>(), c in 1i64..20, neg in any::<bool>()) {
            let a = mci(qq(), &[3, 2, 2]);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let l = a.random_homogeneous(1, &mut rng).unwrap();
            let c = Scalar::from_i64(qq(), if neg { -c } else { c });
            let scaled = a.scale(&c, &l).unwrap();
            prop_assert_eq!(
                is_strong_lefschetz(&a, &l).unwrap().0,
                is_strong_lefschetz(&a, &scaled).unwrap().0
            );
        }

        #[test]
        fn power_rank_matches_composition(seed in any::<u64>(), r in 1u32..5) {
            let a = mci(qq(), &[3, 3]);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let l = a.random_homogeneous(1, &mut rng).unwrap();
            let profile = rank_profile(&a, &l, r).unwrap();
            for row in &profile.rows {
                let mut m = crate::linalg::DenseMatrix::identity(qq(), a.dim(row.degree));
                for step in 0..r as usize {
                    m = a.mult_map_matrix(&l, row.degree + step).unwrap().mul(&m).unwrap();
                }
                prop_assert_eq!(m.rank(), row.rank);
            }
        }

        #[test]
        fn strong_implies_weak(seed in any::<u64>()) {
            let a = mci(qq(), &[2, 3, 2]);
            let strong = search_strong(&a, DEFAULT_TRIALS, seed).unwrap();
            if strong.verdict == Verdict::CertifiedSuccess {
                let weak = search_weak(&a, DEFAULT_TRIALS, seed).unwrap();
                prop_assert_eq!(weak.verdict, Verdict::CertifiedSuccess);
                // Same seed, same first sample: the strong witness is also checked first.
                prop_assert_eq!(weak.trials_used <= strong.trials_used, true);
            }
        }
    }
}
