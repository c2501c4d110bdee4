//! Scenario file schema and validation: a ring, named ideals/modules, and a
//! task list. Polynomials are strings in the library grammar; everything is
//! validated before any task runs.

use limcm_core::groebner::{VTerm, Vector};
use limcm_core::{Error, GradedModule, GradedRing, Ideal, Polynomial, PrimeField, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Scenario {
    pub p: u64,
    pub ring: RingSpec,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub define: BTreeMap<String, Definition>,
    pub tasks: Vec<Task>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RingSpec {
    pub vars: Vec<String>,
    #[serde(default)]
    pub weights: Vec<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub relations: Vec<String>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub domain: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub enum Definition {
    #[serde(rename = "ideal")]
    Ideal(Vec<String>),
    #[serde(rename = "module")]
    Module(ModuleSpec),
}

/// A cokernel presentation: `twists[i]` is the degree of generator i and
/// `matrix[i][j]` is the entry of relation column j at generator i.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModuleSpec {
    pub twists: Vec<i64>,
    pub matrix: Vec<Vec<String>>,
}

/// Reference to an ideal: a defined name or inline generators.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IdealRef {
    Name(String),
    Gens(Vec<String>),
}

/// Reference to a module: a defined name or "R".
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModuleRef(pub String);

impl Default for ModuleRef {
    fn default() -> Self {
        ModuleRef("R".into())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Task {
    pub id: String,
    #[serde(flatten)]
    pub kind: TaskKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<u64>,
}

fn default_nmax() -> u32 {
    4
}

fn default_alpha() -> String {
    "nu".into()
}

fn default_t() -> u32 {
    2
}

fn default_pool_degree() -> u64 {
    2
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TaskKind {
    Koszul {
        elements: Vec<String>,
        #[serde(default)]
        module: ModuleRef,
    },
    Limcm {
        sop: Vec<String>,
        #[serde(default)]
        module: ModuleRef,
        #[serde(default = "default_nmax")]
        n_max: u32,
        #[serde(default = "default_alpha")]
        alpha: String,
    },
    Strong {
        #[serde(default)]
        module: ModuleRef,
        #[serde(default = "default_nmax")]
        n_max: u32,
    },
    HilbertKunz {
        ideal: IdealRef,
        #[serde(default)]
        module: ModuleRef,
        #[serde(default = "default_nmax")]
        n_max: u32,
    },
    Closure {
        ideal: IdealRef,
        u: String,
        #[serde(default)]
        module: ModuleRef,
        #[serde(default = "default_nmax")]
        n_max: u32,
        #[serde(default = "default_alpha")]
        alpha: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        t_levels: Option<Vec<u32>>,
    },
    TightClosure {
        ideal: IdealRef,
        u: String,
        c: String,
        #[serde(default = "default_nmax")]
        n_max: u32,
    },
    ColonCapture {
        x: Vec<String>,
        a: Vec<u64>,
        b: Vec<u64>,
        #[serde(default)]
        module: ModuleRef,
        #[serde(default = "default_nmax")]
        n_max: u32,
        #[serde(default = "default_alpha")]
        alpha: String,
    },
    MonomialPosition {
        sop: Vec<String>,
        #[serde(default = "default_t")]
        t: u32,
        #[serde(default)]
        module: ModuleRef,
        #[serde(default = "default_nmax")]
        n_max: u32,
    },
    Dietz {
        sop: Vec<String>,
        #[serde(default)]
        module: ModuleRef,
        #[serde(default = "default_nmax")]
        n_max: u32,
        #[serde(default = "default_pool_degree")]
        pool_degree: u64,
        /// axiom-(7) instances: for each k, use J = (x_1..x_k) and x_{k+1}
        #[serde(default)]
        axiom7_k: Vec<usize>,
    },
    SerreChi {
        p_ideal: IdealRef,
        q_ideal: IdealRef,
    },
    PosLimit {
        p_ideal: IdealRef,
        q_ideal: IdealRef,
        #[serde(default = "default_nmax")]
        n_max: u32,
    },
    TorBound {
        p_ideal: IdealRef,
        q_ideal: IdealRef,
        x: Vec<String>,
        y: Vec<String>,
        #[serde(default = "default_t")]
        n: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        i_max: Option<usize>,
    },
    SopIndependence {
        x: Vec<String>,
        y: Vec<String>,
        #[serde(default)]
        module: ModuleRef,
        #[serde(default = "default_nmax")]
        n_max: u32,
    },
    IntegralClosure {
        ideal: IdealRef,
    },
    GroebnerBasis {
        ideal: IdealRef,
    },
    Colon {
        ideal: IdealRef,
        by: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        equals: Option<Vec<String>>,
    },
    NormalForm {
        ideal: IdealRef,
        f: String,
    },
}

/// A validated scenario: the ring is built, every named object resolves, and
/// every task parsed its polynomials.
pub struct Compiled {
    pub scenario: Scenario,
    pub ring: GradedRing,
    pub ideals: BTreeMap<String, Ideal>,
    pub modules: BTreeMap<String, GradedModule>,
}

impl Compiled {
    pub fn resolve_ideal(&self, r: &IdealRef) -> Result<Ideal> {
        match r {
            IdealRef::Name(name) => self
                .ideals
                .get(name)
                .cloned()
                .ok_or_else(|| Error::Invalid(format!("unknown ideal `{name}`"))),
            IdealRef::Gens(gens) => {
                let ps: Result<Vec<Polynomial>> =
                    gens.iter().map(|s| self.ring.parse(s)).collect();
                Ok(Ideal::new(&self.ring, ps?))
            }
        }
    }

    pub fn resolve_module(&self, r: &ModuleRef) -> Result<GradedModule> {
        if r.0 == "R" {
            return Ok(GradedModule::ring_module(&self.ring));
        }
        self.modules
            .get(&r.0)
            .cloned()
            .ok_or_else(|| Error::Invalid(format!("unknown module `{}`", r.0)))
    }

    pub fn parse_all(&self, texts: &[String]) -> Result<Vec<Polynomial>> {
        texts.iter().map(|s| self.ring.parse(s)).collect()
    }
}

pub fn compile(scenario: Scenario, budget_override: Option<u64>) -> Result<Compiled> {
    let field = PrimeField::new(scenario.p)?;
    let weights = if scenario.ring.weights.is_empty() {
        vec![1; scenario.ring.vars.len()]
    } else {
        scenario.ring.weights.clone()
    };
    let rel_refs: Vec<&str> = scenario.ring.relations.iter().map(|s| s.as_str()).collect();
    let mut ring = GradedRing::new(field, scenario.ring.vars.clone(), weights, &rel_refs)?;
    if scenario.ring.domain {
        ring = ring.declare_domain();
    }
    if let Some(b) = budget_override {
        ring = ring.with_budget(b);
    }

    let mut ideals = BTreeMap::new();
    let mut modules = BTreeMap::new();
    for (name, def) in &scenario.define {
        if name == "R" {
            return Err(Error::Invalid("the name `R` is reserved for the ring".into()));
        }
        match def {
            Definition::Ideal(gens) => {
                let ps: Result<Vec<Polynomial>> =
                    gens.iter().map(|s| ring.parse(s)).collect();
                ideals.insert(name.clone(), Ideal::new(&ring, ps?));
            }
            Definition::Module(spec) => {
                let rows = spec.twists.len();
                if spec.matrix.len() != rows {
                    return Err(Error::Invalid(format!(
                        "module `{name}`: matrix must have one row per twist"
                    )));
                }
                let ncols = spec.matrix.first().map(|r| r.len()).unwrap_or(0);
                let mut cols: Vec<Vector> = vec![Vector::zero(); ncols];
                for (i, row) in spec.matrix.iter().enumerate() {
                    if row.len() != ncols {
                        return Err(Error::Invalid(format!(
                            "module `{name}`: ragged matrix"
                        )));
                    }
                    for (j, text) in row.iter().enumerate() {
                        let f = ring.parse(text)?;
                        if f.is_zero() {
                            continue;
                        }
                        let ctx = ring.gb_ctx();
                        let mut v = cols[j].clone();
                        for t in &f.terms {
                            v = ctx.add(
                                &v,
                                &Vector {
                                    terms: vec![VTerm {
                                        pos: i as u32,
                                        exp: t.exp.clone(),
                                        coeff: t.coeff,
                                    }],
                                },
                            );
                        }
                        cols[j] = v;
                    }
                }
                let m = GradedModule::from_parts(ring.clone(), spec.twists.clone(), cols, 1);
                // degree coherence check: every column homogeneous
                for (j, col) in m.rels().iter().enumerate() {
                    let w = ring.weights();
                    let degs: std::collections::BTreeSet<i64> = col
                        .terms
                        .iter()
                        .map(|t| {
                            m.gen_twists()[t.pos as usize]
                                + limcm_core::monomial::wdeg(w, &t.exp) as i64
                        })
                        .collect();
                    if degs.len() > 1 {
                        return Err(Error::NotHomogeneous(format!(
                            "module `{name}`: column {j} is not homogeneous for the twists"
                        )));
                    }
                }
                modules.insert(name.clone(), m);
            }
        }
    }

    // ids must be unique
    let mut seen = std::collections::BTreeSet::new();
    for t in &scenario.tasks {
        if !seen.insert(t.id.clone()) {
            return Err(Error::Invalid(format!("duplicate task id `{}`", t.id)));
        }
    }

    Ok(Compiled { scenario, ring, ideals, modules })
}

/// Canonical re-rendering of the scenario: polynomials normalized through
/// parse/display so that the echoed scenario re-runs identically.
pub fn normalize(c: &Compiled) -> Result<Scenario> {
    let ring = &c.ring;
    let norm = |s: &String| -> Result<String> { Ok(ring.display(&ring.parse(s)?)) };
    let norm_vec = |v: &Vec<String>| -> Result<Vec<String>> { v.iter().map(norm).collect() };
    let norm_ideal_ref = |r: &IdealRef| -> Result<IdealRef> {
        Ok(match r {
            IdealRef::Name(n) => IdealRef::Name(n.clone()),
            IdealRef::Gens(g) => IdealRef::Gens(norm_vec(g)?),
        })
    };

    let mut s = c.scenario.clone();
    s.ring.relations = norm_vec(&s.ring.relations)?;
    if s.ring.weights.is_empty() {
        s.ring.weights = vec![1; s.ring.vars.len()];
    }
    for def in s.define.values_mut() {
        match def {
            Definition::Ideal(gens) => *gens = norm_vec(gens)?,
            Definition::Module(spec) => {
                for row in &mut spec.matrix {
                    *row = norm_vec(row)?;
                }
            }
        }
    }
    for t in &mut s.tasks {
        match &mut t.kind {
            TaskKind::Koszul { elements, .. } => *elements = norm_vec(elements)?,
            TaskKind::Limcm { sop, .. } => *sop = norm_vec(sop)?,
            TaskKind::Strong { .. } => {}
            TaskKind::HilbertKunz { ideal, .. } => *ideal = norm_ideal_ref(ideal)?,
            TaskKind::Closure { ideal, u, .. } => {
                *ideal = norm_ideal_ref(ideal)?;
                *u = norm(u)?;
            }
            TaskKind::TightClosure { ideal, u, c: cc, .. } => {
                *ideal = norm_ideal_ref(ideal)?;
                *u = norm(u)?;
                *cc = norm(cc)?;
            }
            TaskKind::ColonCapture { x, .. } => *x = norm_vec(x)?,
            TaskKind::MonomialPosition { sop, .. } => *sop = norm_vec(sop)?,
            TaskKind::Dietz { sop, .. } => *sop = norm_vec(sop)?,
            TaskKind::SerreChi { p_ideal, q_ideal } => {
                *p_ideal = norm_ideal_ref(p_ideal)?;
                *q_ideal = norm_ideal_ref(q_ideal)?;
            }
            TaskKind::PosLimit { p_ideal, q_ideal, .. } => {
                *p_ideal = norm_ideal_ref(p_ideal)?;
                *q_ideal = norm_ideal_ref(q_ideal)?;
            }
            TaskKind::TorBound { p_ideal, q_ideal, x, y, .. } => {
                *p_ideal = norm_ideal_ref(p_ideal)?;
                *q_ideal = norm_ideal_ref(q_ideal)?;
                *x = norm_vec(x)?;
                *y = norm_vec(y)?;
            }
            TaskKind::SopIndependence { x, y, .. } => {
                *x = norm_vec(x)?;
                *y = norm_vec(y)?;
            }
            TaskKind::IntegralClosure { ideal } => *ideal = norm_ideal_ref(ideal)?,
            TaskKind::GroebnerBasis { ideal } => *ideal = norm_ideal_ref(ideal)?,
            TaskKind::Colon { ideal, by, equals } => {
                *ideal = norm_ideal_ref(ideal)?;
                *by = norm(by)?;
                if let Some(eq) = equals {
                    *eq = norm_vec(eq)?;
                }
            }
            TaskKind::NormalForm { ideal, f } => {
                *ideal = norm_ideal_ref(ideal)?;
                *f = norm(f)?;
            }
        }
    }
    Ok(s)
}
