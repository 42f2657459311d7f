use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use super::free::FreePoly;
use super::RingElement;
use crate::error::{Error, Result};
use crate::scalars::{FieldDescriptor, RationalScalar};

pub type Ring = Arc<RingPresentation>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub degree: Vec<i64>,
}

/// `v^m = rhs`, with `rhs` involving only `v` (below `m`) and unbound
/// variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    bound: usize,
    degree: u32,
    rhs: FreePoly,
}

impl Relation {
    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn rhs(&self) -> &FreePoly {
        &self.rhs
    }
}

/// Facts about a presentation that are cited rather than computed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Assumptions {
    pub isolated_singularity_asserted: bool,
    pub normal_asserted: bool,
}

/// Input to [`make_ring`].
#[derive(Clone, Debug)]
pub struct RingSpec {
    pub field: FieldDescriptor,
    pub variables: Vec<(String, Vec<i64>)>,
    pub relations: Vec<RelationSpec>,
    pub assumptions: Assumptions,
}

/// A relation `poly = 0`, optionally with its bound variable fixed.
#[derive(Clone, Debug)]
pub struct RelationSpec {
    pub poly: FreePoly,
    pub bound: Option<usize>,
}

/// A graded quotient `K[v_1..v_N]/(f_1..f_c)` where each `f_j` is monic in
/// its own bound variable. The ring is free over the polynomial ring in the
/// unbound variables on the monomials `prod v_j^{a_j}`, `a_j < m_j`.
pub struct RingPresentation {
    field: FieldDescriptor,
    variables: Vec<Variable>,
    relations: Vec<Relation>,
    assumptions: Assumptions,
    relation_of: Vec<Option<usize>>,
    unbound: Vec<usize>,
    grading_rank: usize,
    powers: Mutex<HashMap<(usize, u32), Arc<FreePoly>>>,
}

impl fmt::Debug for RingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

/// Validates a presentation.
pub fn make_ring(spec: RingSpec) -> Result<Ring> {
    let RingSpec { field, variables, relations, assumptions } = spec;
    let grading_rank = variables.first().map_or(1, |(_, d)| d.len());
    let mut names = HashSet::new();
    for param in field.params() {
        names.insert(param.clone());
    }
    for (name, degree) in &variables {
        if !names.insert(name.clone()) {
            return Err(Error::DuplicateName(name.clone()));
        }
        if degree.len() != grading_rank
            || grading_rank == 0
            || degree.iter().any(|&d| d < 0)
            || degree.iter().all(|&d| d == 0)
        {
            return Err(Error::BadDegree(name.clone()));
        }
    }
    let nvars = variables.len();
    let variables: Vec<Variable> = variables.into_iter().map(|(name, degree)| Variable { name, degree }).collect();
    let degree_of = |exps: &[u32]| -> Vec<i64> {
        let mut d = vec![0i64; grading_rank];
        for (v, &e) in variables.iter().zip(exps) {
            for (acc, &g) in d.iter_mut().zip(&v.degree) {
                *acc += g * e as i64;
            }
        }
        d
    };

    let mut relation_of: Vec<Option<usize>> = vec![None; nvars];
    let mut out_relations = Vec::with_capacity(relations.len());
    for (idx, rel) in relations.into_iter().enumerate() {
        let f = rel.poly;
        if f.nvars() != nvars || f.p() != field.p() || f.nparams() != field.num_params() {
            return Err(Error::Invalid(format!("relation {idx} is over a different ring")));
        }
        if f.is_zero() {
            return Err(Error::NonMonicRelation(idx));
        }
        let mut degrees = f.terms().map(|(e, _)| degree_of(e));
        let d0 = degrees.next().unwrap();
        if degrees.any(|d| d != d0) {
            return Err(Error::InhomogeneousRelation(idx));
        }
        let bound = match rel.bound {
            Some(v) => {
                if v >= nvars {
                    return Err(Error::Invalid(format!("relation {idx}: bad bound variable index")));
                }
                if relation_of[v].is_some() {
                    return Err(Error::DuplicateBoundVariable(variables[v].name.clone()));
                }
                if monic_degree(&f, v).is_none() {
                    return Err(Error::NotMonicIn { relation: idx, variable: variables[v].name.clone() });
                }
                v
            }
            None => (0..nvars)
                .find(|&v| relation_of[v].is_none() && monic_degree(&f, v).is_some())
                .ok_or(Error::NonMonicRelation(idx))?,
        };
        let (m, lead) = monic_degree(&f, bound).unwrap();
        let mut exps = vec![0; nvars];
        exps[bound] = m;
        let lead_inv = lead.inv()?;
        let rest = f.sub(&FreePoly::monomial(exps, lead));
        let rhs = rest.scale(&lead_inv.neg());
        relation_of[bound] = Some(idx);
        out_relations.push(Relation { bound, degree: m, rhs });
    }
    for (idx, rel) in out_relations.iter().enumerate() {
        for (e, _) in rel.rhs.terms() {
            for (v, &x) in e.iter().enumerate() {
                if x > 0 && v != rel.bound && relation_of[v].is_some() {
                    return Err(Error::CrossBoundVariable { relation: idx, variable: variables[v].name.clone() });
                }
            }
        }
    }
    let unbound = (0..nvars).filter(|&v| relation_of[v].is_none()).collect();
    Ok(Arc::new(RingPresentation {
        field,
        variables,
        relations: out_relations,
        assumptions,
        relation_of,
        unbound,
        grading_rank,
        powers: Mutex::new(HashMap::new()),
    }))
}

/// If the only term of `f` of top degree in `v` is a scalar multiple of a
/// pure power `v^m`, returns `m` and that scalar.
fn monic_degree(f: &FreePoly, v: usize) -> Option<(u32, RationalScalar)> {
    let m = f.terms().map(|(e, _)| e[v]).max()?;
    if m == 0 {
        return None;
    }
    let mut top = f.terms().filter(|(e, _)| e[v] == m);
    let (e, c) = top.next()?;
    if top.next().is_some() {
        return None;
    }
    let pure = e.iter().enumerate().all(|(i, &x)| if i == v { x == m } else { x == 0 });
    pure.then(|| (m, c.clone()))
}

impl RingPresentation {
    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn num_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn var_names(&self) -> Vec<String> {
        self.variables.iter().map(|v| v.name.clone()).collect()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v.name == name)
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn assumptions(&self) -> Assumptions {
        self.assumptions
    }

    pub fn grading_rank(&self) -> usize {
        self.grading_rank
    }

    /// Krull dimension `N - c`.
    pub fn dim(&self) -> usize {
        self.variables.len() - self.relations.len()
    }

    /// Unbound variables in index order; they form the system of
    /// parameters used for Cech cohomology.
    pub fn unbound(&self) -> &[usize] {
        &self.unbound
    }

    pub fn bound_vars(&self) -> Vec<usize> {
        self.relations.iter().map(|r| r.bound).collect()
    }

    pub fn relation_of(&self, v: usize) -> Option<usize> {
        self.relation_of[v]
    }

    /// Number of free-basis monomials over the unbound polynomial ring.
    pub fn free_rank(&self) -> u64 {
        self.relations.iter().map(|r| r.degree as u64).product()
    }

    pub fn is_standard_graded(&self) -> bool {
        self.grading_rank == 1 && self.variables.iter().all(|v| v.degree == [1])
    }

    pub fn degree_of(&self, exps: &[u32]) -> Vec<i64> {
        let mut d = vec![0i64; self.grading_rank];
        for (v, &e) in self.variables.iter().zip(exps) {
            for (acc, &g) in d.iter_mut().zip(&v.degree) {
                *acc += g * e as i64;
            }
        }
        d
    }

    pub fn with_assumptions(&self, assumptions: Assumptions) -> Ring {
        Arc::new(RingPresentation {
            field: self.field.clone(),
            variables: self.variables.clone(),
            relations: self.relations.clone(),
            assumptions,
            relation_of: self.relation_of.clone(),
            unbound: self.unbound.clone(),
            grading_rank: self.grading_rank,
            powers: Mutex::new(HashMap::new()),
        })
    }

    pub fn zero_free(&self) -> FreePoly {
        FreePoly::zero(self.p(), self.field.num_params(), self.num_vars())
    }

    pub fn one_free(&self) -> FreePoly {
        FreePoly::constant(self.field.one(), self.num_vars())
    }

    /// Reduces every bound exponent below its monic degree.
    pub fn reduce(&self, f: &FreePoly) -> FreePoly {
        let mut out = self.zero_free();
        for (e, c) in f.terms() {
            if self.is_normal_exps(e) {
                out.add_term(e.clone(), c.clone());
                continue;
            }
            let mut base = e.clone();
            for r in &self.relations {
                base[r.bound] = 0;
            }
            let mut acc = FreePoly::monomial(base, c.clone());
            for (j, r) in self.relations.iter().enumerate() {
                let a = e[r.bound];
                if a == 0 {
                    continue;
                }
                if a < r.degree {
                    let mut shift = vec![0; self.num_vars()];
                    shift[r.bound] = a;
                    acc = acc.mul_term(&shift, &self.field.one());
                } else {
                    acc = acc.mul(&self.bound_power(j, a));
                }
            }
            out = out.add(&acc);
        }
        out
    }

    fn is_normal_exps(&self, e: &[u32]) -> bool {
        self.relations.iter().all(|r| e[r.bound] < r.degree)
    }

    /// Normal form of `v_j^a` for the bound variable of relation `j`.
    pub(crate) fn bound_power(&self, j: usize, a: u32) -> Arc<FreePoly> {
        let rel = &self.relations[j];
        let v = rel.bound;
        if a < rel.degree {
            let mut e = vec![0; self.num_vars()];
            e[v] = a;
            return Arc::new(FreePoly::monomial(e, self.field.one()));
        }
        let mut cache = self.powers.lock().unwrap();
        if let Some(hit) = cache.get(&(j, a)) {
            return hit.clone();
        }
        let mut k = a - 1;
        while k >= rel.degree && !cache.contains_key(&(j, k)) {
            k -= 1;
        }
        let mut cur: Arc<FreePoly> = if k < rel.degree {
            let mut e = vec![0; self.num_vars()];
            e[v] = k;
            Arc::new(FreePoly::monomial(e, self.field.one()))
        } else {
            cache[&(j, k)].clone()
        };
        while k < a {
            let mut next = self.zero_free();
            for (e, c) in cur.terms() {
                let mut e = e.clone();
                if e[v] + 1 < rel.degree {
                    e[v] += 1;
                    next.add_term(e, c.clone());
                } else {
                    e[v] = 0;
                    next = next.add(&rel.rhs.mul_term(&e, c));
                }
            }
            k += 1;
            cur = Arc::new(next);
            cache.insert((j, k), cur.clone());
        }
        cur
    }

    pub fn element(self: &Arc<Self>, f: FreePoly) -> RingElement {
        let poly = self.reduce(&f);
        RingElement::from_normal(self.clone(), poly)
    }

    pub fn var(self: &Arc<Self>, i: usize) -> RingElement {
        let f = FreePoly::var(i, self.num_vars(), self.p(), self.field.num_params());
        self.element(f)
    }

    pub fn scalar(self: &Arc<Self>, c: RationalScalar) -> RingElement {
        RingElement::from_normal(self.clone(), FreePoly::constant(c, self.num_vars()))
    }

    pub fn one(self: &Arc<Self>) -> RingElement {
        self.scalar(self.field.one())
    }

    pub fn zero(self: &Arc<Self>) -> RingElement {
        RingElement::from_normal(self.clone(), self.zero_free())
    }

    /// `v_1^{e_1} ... v_N^{e_N}` reduced to normal form.
    pub fn monomial(self: &Arc<Self>, exps: Vec<u32>) -> RingElement {
        self.element(FreePoly::monomial(exps, self.field.one()))
    }

    pub fn describe(&self) -> String {
        let vars = self.var_names();
        let rels: Vec<String> = self
            .relations
            .iter()
            .map(|r| {
                format!(
                    "{}^{} = {}",
                    self.variables[r.bound].name,
                    r.degree,
                    r.rhs.display_with(&vars, self.field.params())
                )
            })
            .collect();
        let params = self.field.params().join(",");
        let field = if self.field.root_depth() == 1 {
            format!("F_{}({}) [p-th roots]", self.p(), params)
        } else if params.is_empty() {
            format!("F_{}", self.p())
        } else {
            format!("F_{}({})", self.p(), params)
        };
        format!("{}[{}]/({})", field, vars.join(","), rels.join(", "))
    }
}
