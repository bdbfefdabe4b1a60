//! Standard graded Artinian algebras built from monic extensions and quotients by forms.
//!
//! Every algebra is either a tower `K[x_1..x_n]/(f_1..f_n)` with `f_i` monic in `x_i`, or the
//! quotient of another algebra by one homogeneous form. A quotient stores, per degree, the
//! standard coordinates it keeps (its section `ι_t`) and the projection `π_t` from its parent.
//! Multiplication of quotient elements lifts to the parent, multiplies there and projects.

mod tower;

use std::fmt::Write as _;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::DenseMatrix;

pub use tower::Monomial;
use tower::Tower;

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// A homogeneous element: a degree and coordinates in the degree-`degree` basis of its algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousElement {
    algebra: u64,
    degree: usize,
    coeffs: Vec<Scalar>,
}

impl HomogeneousElement {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }
}

/// `f = x^d + a_1 x^{d-1} + … + a_d` with `a_i` homogeneous of degree `i` in the base algebra.
#[derive(Clone, Debug)]
pub struct MonicExtensionPoly {
    pub var: String,
    pub lower: Vec<HomogeneousElement>,
}

impl MonicExtensionPoly {
    pub fn new(var: impl Into<String>, lower: Vec<HomogeneousElement>) -> Self {
        MonicExtensionPoly {
            var: var.into(),
            lower,
        }
    }

    /// `x^d` over `base`.
    pub fn pure_power(base: &GradedAlgebra, var: impl Into<String>, d: usize) -> Self {
        MonicExtensionPoly::new(var, (1..=d).map(|i| base.zero(i)).collect())
    }

    /// `(a + x)^d = x^d + Σ_i binom(d, i) a^i x^{d-i}` for a degree-1 element `a`.
    pub fn shifted_power(
        base: &GradedAlgebra,
        var: impl Into<String>,
        a: &HomogeneousElement,
        d: usize,
    ) -> Result<Self> {
        let field = base.field();
        let mut lower = Vec::with_capacity(d);
        for i in 1..=d {
            let c = Scalar::from_bigint(field, &crate::field::binomial_int(d as i64, i as i64));
            lower.push(base.scale(&c, &base.pow(a, i as u32)?)?);
        }
        Ok(MonicExtensionPoly::new(var, lower))
    }

    pub fn degree(&self) -> usize {
        self.lower.len()
    }

    /// True when every lower coefficient vanishes, i.e. `f = x^d`.
    pub fn is_pure_power(&self) -> bool {
        self.lower.iter().all(HomogeneousElement::is_zero)
    }
}

#[derive(Clone, Debug)]
enum Step {
    Extend {
        name: String,
        degree: usize,
        lower: Vec<Vec<(Monomial, Scalar)>>,
    },
    Quotient {
        degree: usize,
        terms: Vec<(Monomial, Scalar)>,
    },
}

#[derive(Debug)]
struct Quotient {
    parent: GradedAlgebra,
    /// Parent basis indices kept in each degree.
    standard: Vec<Vec<usize>>,
    /// `π_t`: `dim B_t x dim A_t`.
    projection: Vec<DenseMatrix>,
}

#[derive(Debug)]
enum Kind {
    Tower(Tower),
    Quotient(Quotient),
}

#[derive(Debug)]
struct Inner {
    id: u64,
    field: FieldSpec,
    dims: Vec<usize>,
    kind: Kind,
    record: Vec<Step>,
    base: Option<GradedAlgebra>,
}

/// A finite-dimensional standard graded `K`-algebra. Cheap to clone; immutable once built.
#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    inner: Arc<Inner>,
}

impl GradedAlgebra {
    fn from_parts(
        field: FieldSpec,
        dims: Vec<usize>,
        kind: Kind,
        record: Vec<Step>,
        base: Option<GradedAlgebra>,
    ) -> Self {
        GradedAlgebra {
            inner: Arc::new(Inner {
                id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
                field,
                dims,
                kind,
                record,
                base,
            }),
        }
    }

    /// `K` itself.
    pub fn trivial(field: FieldSpec) -> Self {
        let tower = Tower::trivial(field);
        GradedAlgebra::from_parts(field, vec![1], Kind::Tower(tower), Vec::new(), None)
    }

    /// `K[x_1..x_n]/(x_1^{a_1}, …, x_n^{a_n})`.
    pub fn monomial_complete_intersection(field: FieldSpec, exponents: &[usize]) -> Result<Self> {
        let mut alg = GradedAlgebra::trivial(field);
        for (i, &d) in exponents.iter().enumerate() {
            let f = MonicExtensionPoly::pure_power(&alg, format!("x{}", i + 1), d);
            alg = alg.extend_monic(&f)?;
        }
        Ok(alg)
    }

    pub fn field(&self) -> FieldSpec {
        self.inner.field
    }

    /// Identity used to reject elements of other algebras.
    pub fn id(&self) -> u64 {
        self.inner.id
    }

    pub fn sigma(&self) -> usize {
        self.inner.dims.len() - 1
    }

    pub fn dim(&self, t: usize) -> usize {
        self.inner.dims.get(t).copied().unwrap_or(0)
    }

    /// `[dim A_0, …, dim A_σ]`.
    pub fn hilbert_function(&self) -> Vec<usize> {
        self.inner.dims.clone()
    }

    /// `e(A) = Σ_t dim A_t`.
    pub fn multiplicity(&self) -> usize {
        self.inner.dims.iter().sum()
    }

    /// True when no quotient step was taken.
    pub fn is_pure_tower(&self) -> bool {
        matches!(self.inner.kind, Kind::Tower(_))
            && !self
                .inner
                .record
                .iter()
                .any(|s| matches!(s, Step::Quotient { .. }))
    }

    /// The algebra this one was obtained from by `extend_monic`, if any.
    pub fn base(&self) -> Option<&GradedAlgebra> {
        self.inner.base.as_ref()
    }

    fn root(&self) -> &Tower {
        match &self.inner.kind {
            Kind::Tower(t) => t,
            Kind::Quotient(q) => q.parent.root(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.root().num_vars()
    }

    pub fn var_names(&self) -> Vec<String> {
        self.root().vars.iter().map(|v| v.name.clone()).collect()
    }

    /// Monomial labels of the degree-`t` basis (standard monomials of the root tower).
    pub fn basis_labels(&self, t: usize) -> Vec<Monomial> {
        match &self.inner.kind {
            Kind::Tower(tower) => tower.basis.get(t).cloned().unwrap_or_default(),
            Kind::Quotient(q) => {
                let parent = q.parent.basis_labels(t);
                q.standard
                    .get(t)
                    .map(|s| s.iter().map(|&i| parent[i].clone()).collect())
                    .unwrap_or_default()
            }
        }
    }

    fn check(&self, u: &HomogeneousElement) -> Result<()> {
        if u.algebra == self.inner.id {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    // ----- elements -----

    pub fn zero(&self, degree: usize) -> HomogeneousElement {
        HomogeneousElement {
            algebra: self.inner.id,
            degree,
            coeffs: vec![Scalar::zero(self.field()); self.dim(degree)],
        }
    }

    pub fn one(&self) -> HomogeneousElement {
        self.element(0, vec![Scalar::one(self.field())])
            .expect("A_0 is one-dimensional")
    }

    /// Element from explicit coordinates in the degree-`degree` basis.
    pub fn element(&self, degree: usize, coeffs: Vec<Scalar>) -> Result<HomogeneousElement> {
        if coeffs.len() != self.dim(degree) {
            return Err(Error::DimensionMismatch(format!(
                "{} coordinates for dim A_{degree} = {}",
                coeffs.len(),
                self.dim(degree)
            )));
        }
        if let Some(bad) = coeffs.iter().find(|c| c.field() != self.field()) {
            return Err(Error::FieldMismatch {
                left: self.field(),
                right: bad.field(),
            });
        }
        Ok(HomogeneousElement {
            algebra: self.inner.id,
            degree,
            coeffs,
        })
    }

    /// Element from integer coordinates.
    pub fn element_i64(&self, degree: usize, coeffs: &[i64]) -> Result<HomogeneousElement> {
        let field = self.field();
        self.element(
            degree,
            coeffs.iter().map(|&c| Scalar::from_i64(field, c)).collect(),
        )
    }

    /// The class of a linear combination of arbitrary monomials in the tower variables.
    /// Shorter exponent vectors are padded with zeros.
    pub fn element_from_terms(
        &self,
        degree: usize,
        terms: &[(Monomial, Scalar)],
    ) -> Result<HomogeneousElement> {
        for (m, c) in terms {
            if m.len() > self.num_vars() {
                return Err(Error::InvalidArgument(format!(
                    "monomial {m:?} has more than {} variables",
                    self.num_vars()
                )));
            }
            if m.iter().map(|&e| e as usize).sum::<usize>() != degree {
                return Err(Error::DegreeMismatch(format!(
                    "monomial {m:?} in a form of degree {degree}"
                )));
            }
            if c.field() != self.field() {
                return Err(Error::FieldMismatch {
                    left: self.field(),
                    right: c.field(),
                });
            }
        }
        let root = self.root().from_terms(degree, terms);
        let coeffs = self.project_from_root(degree, root);
        self.element(degree, coeffs)
    }

    /// Image of the `i`-th tower variable.
    pub fn variable(&self, i: usize) -> Result<HomogeneousElement> {
        if i >= self.num_vars() {
            return Err(Error::InvalidArgument(format!("no variable with index {i}")));
        }
        let mut m = vec![0u32; self.num_vars()];
        m[i] = 1;
        self.element_from_terms(1, &[(m, Scalar::one(self.field()))])
    }

    /// Image of an element of [`GradedAlgebra::base`] under the inclusion `A → A[x]/(f)`.
    pub fn include(&self, u: &HomogeneousElement) -> Result<HomogeneousElement> {
        let base = self
            .base()
            .ok_or_else(|| Error::InvalidArgument("algebra has no base".into()))?;
        base.check(u)?;
        self.element_from_terms(u.degree, &base.root_terms(u))
    }

    /// The element written over standard monomials of the root tower.
    pub fn root_terms(&self, u: &HomogeneousElement) -> Vec<(Monomial, Scalar)> {
        let lifted = self.lift_to_root(u.degree, &u.coeffs);
        self.root().to_terms(u.degree, &lifted)
    }

    fn lift_to_root(&self, degree: usize, v: &[Scalar]) -> Vec<Scalar> {
        match &self.inner.kind {
            Kind::Tower(_) => v.to_vec(),
            Kind::Quotient(q) => {
                let lifted = q.lift(degree, v, self.field());
                q.parent.lift_to_root(degree, &lifted)
            }
        }
    }

    fn project_from_root(&self, degree: usize, v: Vec<Scalar>) -> Vec<Scalar> {
        match &self.inner.kind {
            Kind::Tower(_) => v,
            Kind::Quotient(q) => {
                let parent = q.parent.project_from_root(degree, v);
                q.project(degree, &parent, self.field())
            }
        }
    }

    pub fn add(&self, u: &HomogeneousElement, v: &HomogeneousElement) -> Result<HomogeneousElement> {
        self.check(u)?;
        self.check(v)?;
        if u.degree != v.degree {
            return Err(Error::DegreeMismatch(format!(
                "cannot add degrees {} and {}",
                u.degree, v.degree
            )));
        }
        let coeffs = u.coeffs.iter().zip(&v.coeffs).map(|(a, b)| a + b).collect();
        self.element(u.degree, coeffs)
    }

    pub fn sub(&self, u: &HomogeneousElement, v: &HomogeneousElement) -> Result<HomogeneousElement> {
        self.add(u, &self.scale(&-Scalar::one(self.field()), v)?)
    }

    pub fn scale(&self, c: &Scalar, u: &HomogeneousElement) -> Result<HomogeneousElement> {
        self.check(u)?;
        let coeffs = u
            .coeffs
            .iter()
            .map(|a| c.checked_mul(a))
            .collect::<Result<Vec<_>>>()?;
        self.element(u.degree, coeffs)
    }

    /// Product in the algebra; the zero element of degree `deg u + deg v` when that exceeds σ.
    pub fn multiply(
        &self,
        u: &HomogeneousElement,
        v: &HomogeneousElement,
    ) -> Result<HomogeneousElement> {
        self.check(u)?;
        self.check(v)?;
        let coeffs = self.multiply_raw(u.degree, &u.coeffs, v.degree, &v.coeffs);
        self.element(u.degree + v.degree, coeffs)
    }

    fn multiply_raw(&self, du: usize, u: &[Scalar], dv: usize, v: &[Scalar]) -> Vec<Scalar> {
        match &self.inner.kind {
            Kind::Tower(t) => t.multiply(du, u, dv, v),
            Kind::Quotient(q) => {
                let deg = du + dv;
                if self.dim(deg) == 0 {
                    return Vec::new();
                }
                let field = self.field();
                let lu = q.lift(du, u, field);
                let lv = q.lift(dv, v, field);
                let prod = q.parent.multiply_raw(du, &lu, dv, &lv);
                q.project(deg, &prod, field)
            }
        }
    }

    pub fn pow(&self, u: &HomogeneousElement, r: u32) -> Result<HomogeneousElement> {
        self.check(u)?;
        let mut acc = self.one();
        for _ in 0..r {
            acc = self.multiply(&acc, u)?;
        }
        Ok(acc)
    }

    /// Matrix of `w·: A_i → A_{i + deg w}`, of shape `dim A_{i+deg w} x dim A_i`.
    pub fn mult_map_matrix(&self, w: &HomogeneousElement, i: usize) -> Result<DenseMatrix> {
        self.check(w)?;
        Ok(self.mult_map_raw(w.degree, &w.coeffs, i))
    }

    fn mult_map_raw(&self, dw: usize, w: &[Scalar], i: usize) -> DenseMatrix {
        let field = self.field();
        let (rows, cols) = (self.dim(i + dw), self.dim(i));
        if rows == 0 || cols == 0 {
            return DenseMatrix::zeros(field, rows, cols);
        }
        match &self.inner.kind {
            Kind::Tower(t) => {
                let mut out = DenseMatrix::zeros(field, rows, cols);
                let mut prod = vec![0u32; t.num_vars()];
                for (col, m) in t.basis[i].iter().enumerate() {
                    for (k, c) in w.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                        for (e, (a, b)) in prod.iter_mut().zip(m.iter().zip(&t.basis[dw][k])) {
                            *e = a + b;
                        }
                        for (idx, c2) in t.normal_form(&prod).iter() {
                            let mut x = out.get(*idx, col).clone();
                            x.add_mul_assign(c, c2);
                            out.set(*idx, col, x);
                        }
                    }
                }
                out
            }
            Kind::Quotient(q) => {
                let lw = q.lift(dw, w, field);
                let full = q.parent.mult_map_raw(dw, &lw, i);
                let kept = DenseMatrix::from_fn(field, full.rows(), cols, |r, c| {
                    full.get(r, q.standard[i][c]).clone()
                });
                q.projection[i + dw]
                    .mul(&kept)
                    .expect("projection shape matches")
            }
        }
    }

    // ----- construction -----

    /// `B = A[x]/(f)` for `f` monic in the new variable.
    pub fn extend_monic(&self, f: &MonicExtensionPoly) -> Result<GradedAlgebra> {
        let d = f.degree();
        if d == 0 {
            return Err(Error::InvalidArgument(
                "monic extension needs degree at least 1".into(),
            ));
        }
        for (i, a) in f.lower.iter().enumerate() {
            self.check(a)?;
            if a.degree != i + 1 {
                return Err(Error::DegreeMismatch(format!(
                    "coefficient a_{} has degree {}",
                    i + 1,
                    a.degree
                )));
            }
        }
        let lower: Vec<_> = f.lower.iter().map(|a| self.root_terms(a)).collect();
        let tower = self.root().extend(f.var.clone(), d as u32, lower.clone());
        let dims = (0..=tower.sigma()).map(|t| tower.dim(t)).collect();
        let mut record = self.inner.record.clone();
        record.push(Step::Extend {
            name: f.var.clone(),
            degree: d,
            lower,
        });
        let mut alg = GradedAlgebra::from_parts(self.field(), dims, Kind::Tower(tower), Vec::new(), None);
        for step in &self.inner.record {
            if let Step::Quotient { degree, terms } = step {
                let g = alg.element_from_terms(*degree, terms)?;
                alg = alg.quotient_by_form(&g)?;
            }
        }
        let inner = Arc::try_unwrap(alg.inner).expect("freshly built algebra is unshared");
        Ok(GradedAlgebra::from_parts(
            inner.field,
            inner.dims,
            inner.kind,
            record,
            Some(self.clone()),
        ))
    }

    /// `A/(g)` for a nonzero form of positive degree.
    pub fn quotient_by_form(&self, g: &HomogeneousElement) -> Result<GradedAlgebra> {
        self.check(g)?;
        if g.degree == 0 {
            return Err(Error::InvalidArgument(
                "quotient form must have positive degree".into(),
            ));
        }
        if g.is_zero() {
            return Err(Error::ZeroForm);
        }
        let field = self.field();
        let d = g.degree;
        let mut standard = Vec::new();
        let mut projection = Vec::new();
        for t in 0..=self.sigma() {
            let n = self.dim(t);
            if t < d {
                standard.push((0..n).collect());
                projection.push(DenseMatrix::identity(field, n));
                continue;
            }
            // Rows of the transpose span g·A_{t-d} inside A_t.
            let image = self.mult_map_raw(d, &g.coeffs, t - d).transpose();
            let rref = image.rref();
            let mut pivot_row = vec![None; n];
            for (r, &c) in rref.pivot_cols.iter().enumerate() {
                pivot_row[c] = Some(r);
            }
            let kept: Vec<usize> = (0..n).filter(|&c| pivot_row[c].is_none()).collect();
            let pi = DenseMatrix::from_fn(field, kept.len(), n, |b, a| match pivot_row[a] {
                None if a == kept[b] => Scalar::one(field),
                None => Scalar::zero(field),
                Some(r) => -rref.matrix.get(r, kept[b]),
            });
            standard.push(kept);
            projection.push(pi);
        }
        let mut dims: Vec<usize> = standard.iter().map(Vec::len).collect();
        while dims.len() > 1 && *dims.last().unwrap() == 0 {
            dims.pop();
        }
        standard.truncate(dims.len());
        projection.truncate(dims.len());
        let mut record = self.inner.record.clone();
        record.push(Step::Quotient {
            degree: d,
            terms: self.root_terms(g),
        });
        Ok(GradedAlgebra::from_parts(
            field,
            dims,
            Kind::Quotient(Quotient {
                parent: self.clone(),
                standard,
                projection,
            }),
            record,
            None,
        ))
    }

    /// `π_t` and the kept parent coordinates (the section `ι_t`), for quotients only.
    pub fn quotient_maps(&self, t: usize) -> Option<(DenseMatrix, DenseMatrix)> {
        let Kind::Quotient(q) = &self.inner.kind else {
            return None;
        };
        let field = self.field();
        let parent_dim = q.parent.dim(t);
        let kept = q.standard.get(t).cloned().unwrap_or_default();
        let pi = q
            .projection
            .get(t)
            .cloned()
            .unwrap_or_else(|| DenseMatrix::zeros(field, 0, parent_dim));
        let iota = DenseMatrix::from_fn(field, parent_dim, kept.len(), |a, b| {
            if kept[b] == a {
                Scalar::one(field)
            } else {
                Scalar::zero(field)
            }
        });
        Some((pi, iota))
    }

    /// The algebra a quotient was taken from.
    pub fn parent(&self) -> Option<&GradedAlgebra> {
        match &self.inner.kind {
            Kind::Tower(_) => None,
            Kind::Quotient(q) => Some(&q.parent),
        }
    }

    /// Per-degree socle dimensions and whether the socle is one-dimensional (Gorenstein).
    pub fn socle_dimension(&self) -> (Vec<usize>, bool) {
        let generators: Vec<HomogeneousElement> = (0..self.dim(1))
            .map(|k| {
                let mut c = vec![Scalar::zero(self.field()); self.dim(1)];
                c[k] = Scalar::one(self.field());
                self.element(1, c).expect("unit vector")
            })
            .collect();
        let socle: Vec<usize> = (0..=self.sigma())
            .map(|t| {
                let n = self.dim(t);
                let maps: Vec<DenseMatrix> = generators
                    .iter()
                    .map(|v| self.mult_map_raw(1, &v.coeffs, t))
                    .collect();
                let heights: Vec<usize> = maps.iter().map(DenseMatrix::rows).collect();
                let stacked = DenseMatrix::from_blocks(self.field(), &heights, &[n], |b, _| {
                    Some(maps[b].clone())
                })
                .expect("blocks share the source dimension");
                n - stacked.rank()
            })
            .collect();
        let gorenstein = socle.iter().sum::<usize>() == 1;
        (socle, gorenstein)
    }

    /// Uniform coefficients: all of GF(p), or integers in `[-10, 10]` over ℚ.
    pub fn random_homogeneous<R: Rng + ?Sized>(
        &self,
        degree: usize,
        rng: &mut R,
    ) -> Result<HomogeneousElement> {
        let n = self.dim(degree);
        if n == 0 {
            return Err(Error::EmptyDegree(degree));
        }
        let field = self.field();
        let coeffs = (0..n)
            .map(|_| match field.modulus() {
                Some(p) => Scalar::from_i64(field, rng.random_range(0..p) as i64),
                None => Scalar::from_i64(field, rng.random_range(-10..=10)),
            })
            .collect();
        self.element(degree, coeffs)
    }

    /// Quotient by the form [`random_homogeneous`](Self::random_homogeneous) draws from
    /// `ChaCha8Rng::seed_from_u64(seed)`.
    pub fn quotient_by_random_form(&self, degree: usize, seed: u64) -> Result<GradedAlgebra> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = self.random_homogeneous(degree, &mut rng)?;
        self.quotient_by_form(&g)
    }

    /// Stable digest of the construction record.
    pub fn fingerprint(&self) -> String {
        let mut text = format!("field {}\n", self.field());
        for step in &self.inner.record {
            match step {
                Step::Extend {
                    name,
                    degree,
                    lower,
                } => {
                    let _ = write!(text, "extend {name} {degree}");
                    for a in lower {
                        let _ = write!(text, " [{}]", terms_text(a));
                    }
                }
                Step::Quotient { degree, terms } => {
                    let _ = write!(text, "quotient {degree} [{}]", terms_text(terms));
                }
            }
            text.push('\n');
        }
        let digest = Sha256::digest(text.as_bytes());
        hex::encode(&digest[..8])
    }

    /// Render an element as a polynomial in the tower variables.
    pub fn format_element(&self, u: &HomogeneousElement) -> String {
        let names = self.var_names();
        let terms = self.root_terms(u);
        if terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in terms.iter().enumerate() {
            let text = c.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let vars: Vec<String> = m
                .iter()
                .zip(&names)
                .filter(|(e, _)| **e > 0)
                .map(|(e, n)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
                .collect();
            match (mag.as_str(), vars.is_empty()) {
                (_, true) => out.push_str(&mag),
                ("1", false) => out.push_str(&vars.join("*")),
                _ => {
                    out.push_str(&mag);
                    out.push('*');
                    out.push_str(&vars.join("*"));
                }
            }
        }
        out
    }
}

fn terms_text(terms: &[(Monomial, Scalar)]) -> String {
    terms
        .iter()
        .map(|(m, c)| format!("{c}:{m:?}"))
        .collect::<Vec<_>>()
        .join(" ")
}

impl Quotient {
    fn lift(&self, degree: usize, v: &[Scalar], field: FieldSpec) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(field); self.parent.dim(degree)];
        if let Some(kept) = self.standard.get(degree) {
            for (b, &a) in kept.iter().enumerate() {
                out[a] = v[b].clone();
            }
        }
        out
    }

    fn project(&self, degree: usize, v: &[Scalar], _field: FieldSpec) -> Vec<Scalar> {
        match self.projection.get(degree) {
            Some(pi) => pi.apply(v).expect("projection shape matches"),
            None => Vec::new(),
        }
    }
}

/// Whether `h` is palindromic and whether it rises weakly then falls weakly.
pub fn check_symmetric_unimodal(h: &[usize]) -> (bool, bool) {
    if h.is_empty() {
        return (true, true);
    }
    let symmetric = h.iter().eq(h.iter().rev());
    let peak = h
        .iter()
        .enumerate()
        .max_by_key(|&(i, v)| (*v, std::cmp::Reverse(i)))
        .map_or(0, |(i, _)| i);
    let unimodal = h[..=peak]
        .windows(2)
        .all(|w| w[0] <= w[1])
        && h[peak..].windows(2).all(|w| w[0] >= w[1]);
    (symmetric, unimodal)
}

#[cfg(test)]
mod tests;
