//! Towers of monic extensions `K[x_1]/(f_1) ⊂ … ⊂ K[x_1..x_n]/(f_1..f_n)`.
//!
//! Standard monomials are exponent vectors with `e_i < d_i`. Products are rewritten with the
//! relation of the highest variable whose exponent overflows; each rewrite lowers that exponent
//! and touches only lower variables, so the recursion terminates. Normal forms of non-standard
//! monomials are memoized.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::field::{FieldSpec, Scalar};

pub type Monomial = Vec<u32>;

/// Sparse vector over the standard basis of one degree.
pub type Sparse = Vec<(usize, Scalar)>;

#[derive(Debug)]
pub(crate) struct TowerVar {
    pub name: String,
    pub degree: u32,
    /// `lower[i - 1]` is `a_i` as terms over standard monomials of the earlier variables.
    pub lower: Vec<Vec<(Monomial, Scalar)>>,
}

#[derive(Debug)]
pub(crate) struct Tower {
    pub field: FieldSpec,
    pub vars: Vec<TowerVar>,
    pub basis: Vec<Vec<Monomial>>,
    index: HashMap<Monomial, usize>,
    cache: RwLock<HashMap<Monomial, Arc<Sparse>>>,
}

fn degree_of(m: &[u32]) -> usize {
    m.iter().map(|&e| e as usize).sum()
}

impl Tower {
    pub fn trivial(field: FieldSpec) -> Tower {
        Tower::with_vars(field, Vec::new())
    }

    fn with_vars(field: FieldSpec, vars: Vec<TowerVar>) -> Tower {
        let sigma: usize = vars.iter().map(|v| v.degree as usize - 1).sum();
        let mut basis = vec![Vec::new(); sigma + 1];
        let mut current = vec![0u32; vars.len()];
        enumerate(&vars, 0, &mut current, &mut basis);
        for deg in &mut basis {
            // Graded-lex: within a degree, larger exponent of the earlier variable first.
            deg.sort_by(|a, b| b.cmp(a));
        }
        let index = basis
            .iter()
            .flat_map(|deg| deg.iter().enumerate().map(|(i, m)| (m.clone(), i)))
            .collect();
        Tower {
            field,
            vars,
            basis,
            index,
            cache: RwLock::new(HashMap::new()),
        }
    }

    /// Adjoin `x` with `x^d + Σ a_i x^{d-i} = 0`. The `a_i` are given over this tower's monomials.
    pub fn extend(&self, name: String, degree: u32, lower: Vec<Vec<(Monomial, Scalar)>>) -> Tower {
        let mut vars: Vec<TowerVar> = self
            .vars
            .iter()
            .map(|v| TowerVar {
                name: v.name.clone(),
                degree: v.degree,
                lower: v
                    .lower
                    .iter()
                    .map(|a| a.iter().map(|(m, c)| (pad(m, 1), c.clone())).collect())
                    .collect(),
            })
            .collect();
        let lower = lower
            .into_iter()
            .map(|a| a.into_iter().map(|(m, c)| (pad(&m, 1), c)).collect())
            .collect();
        vars.push(TowerVar {
            name,
            degree,
            lower,
        });
        Tower::with_vars(self.field, vars)
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn sigma(&self) -> usize {
        self.basis.len() - 1
    }

    pub fn dim(&self, t: usize) -> usize {
        self.basis.get(t).map_or(0, Vec::len)
    }

    fn is_standard(&self, m: &[u32]) -> bool {
        m.iter().zip(&self.vars).all(|(&e, v)| e < v.degree)
    }

    /// Normal form of an arbitrary monomial over the standard basis of its degree.
    pub fn normal_form(&self, m: &[u32]) -> Arc<Sparse> {
        let deg = degree_of(m);
        if deg > self.sigma() {
            return Arc::new(Vec::new());
        }
        if self.is_standard(m) {
            let idx = self.index[m];
            return Arc::new(vec![(idx, Scalar::one(self.field))]);
        }
        if let Some(hit) = self.cache.read().expect("cache poisoned").get(m) {
            return Arc::clone(hit);
        }
        let top = (0..self.vars.len())
            .rev()
            .find(|&i| m[i] >= self.vars[i].degree)
            .expect("non-standard monomial has an overflowing variable");
        let mut acc = vec![Scalar::zero(self.field); self.dim(deg)];
        // x_top^d = -Σ_i a_i x_top^{d-i}
        for (i, a) in self.vars[top].lower.iter().enumerate() {
            let shift = i as u32 + 1;
            for (mono, c) in a {
                let mut next = m.to_vec();
                next[top] -= shift;
                for (e, add) in next.iter_mut().zip(mono) {
                    *e += add;
                }
                for (idx, c2) in self.normal_form(&next).iter() {
                    acc[*idx].add_mul_assign(&-c, c2);
                }
            }
        }
        let result: Arc<Sparse> = Arc::new(
            acc.into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        );
        self.cache
            .write()
            .expect("cache poisoned")
            .insert(m.to_vec(), Arc::clone(&result));
        result
    }

    /// Product of dense homogeneous vectors of degrees `du` and `dv`.
    pub fn multiply(&self, du: usize, u: &[Scalar], dv: usize, v: &[Scalar]) -> Vec<Scalar> {
        let deg = du + dv;
        let mut acc = vec![Scalar::zero(self.field); self.dim(deg)];
        if acc.is_empty() {
            return acc;
        }
        let mut prod = vec![0u32; self.vars.len()];
        for (i, cu) in u.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, cv) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                for (k, e) in prod.iter_mut().enumerate() {
                    *e = self.basis[du][i][k] + self.basis[dv][j][k];
                }
                let cuv = cu * cv;
                for (idx, c) in self.normal_form(&prod).iter() {
                    acc[*idx].add_mul_assign(&cuv, c);
                }
            }
        }
        acc
    }

    /// Dense vector for a linear combination of arbitrary monomials of degree `deg`.
    pub fn from_terms(&self, deg: usize, terms: &[(Monomial, Scalar)]) -> Vec<Scalar> {
        let mut acc = vec![Scalar::zero(self.field); self.dim(deg)];
        for (m, c) in terms {
            let m = pad(m, self.vars.len().saturating_sub(m.len()));
            debug_assert_eq!(degree_of(&m), deg);
            for (idx, c2) in self.normal_form(&m).iter() {
                acc[*idx].add_mul_assign(c, c2);
            }
        }
        acc
    }

    /// Nonzero entries of a dense vector as monomial terms.
    pub fn to_terms(&self, deg: usize, v: &[Scalar]) -> Vec<(Monomial, Scalar)> {
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.basis[deg][i].clone(), c.clone()))
            .collect()
    }
}

fn pad(m: &[u32], extra: usize) -> Monomial {
    let mut out = m.to_vec();
    out.extend(std::iter::repeat_n(0, extra));
    out
}

fn enumerate(vars: &[TowerVar], k: usize, current: &mut Monomial, basis: &mut [Vec<Monomial>]) {
    if k == vars.len() {
        basis[degree_of(current)].push(current.clone());
        return;
    }
    for e in 0..vars[k].degree {
        current[k] = e;
        enumerate(vars, k + 1, current, basis);
    }
    current[k] = 0;
}
