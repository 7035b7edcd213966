//! Finite weight supports with a step set, and the extremal-weight search.

use crate::error::{Error, Result};
use crate::lattice::{RationalFunctional, RootVec, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::{BTreeSet, HashMap, HashSet};

/// A step `s` and the two properties it is claimed to have with respect
/// to the support.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step {
    pub v: RootVec,
    /// Forward chains `λ, λ+s, λ+2s, …` leave the support.
    pub bounded: bool,
    /// `(supp - s) ∩ floor ⊆ supp`.
    pub shift_closed: bool,
}

impl Step {
    pub fn new(v: RootVec, bounded: bool, shift_closed: bool) -> Self {
        Step {
            v,
            bounded,
            shift_closed,
        }
    }
}

/// A finite support lying in the half-space `φ ≥ φ_min` (the floor).
#[derive(Debug, Clone, Serialize)]
pub struct SupportModel {
    supp: Vec<RootVec>,
    #[serde(skip)]
    set: HashSet<RootVec>,
    steps: Vec<Step>,
    phi: RationalFunctional,
    #[serde(serialize_with = "crate::lattice::ser_q")]
    phi_min: Q,
}

impl SupportModel {
    /// Fails if a flag is not actually a property of the data.
    pub fn new(
        supp: impl IntoIterator<Item = RootVec>,
        steps: Vec<Step>,
        phi: RationalFunctional,
        phi_min: Q,
    ) -> Result<Self> {
        let supp: Vec<RootVec> = supp
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if let Some(x) = supp.iter().find(|x| phi.eval(x) < phi_min) {
            return Err(Error::InvalidModel(format!("{x} below the floor")));
        }
        let set: HashSet<RootVec> = supp.iter().cloned().collect();
        let m = SupportModel {
            supp,
            set,
            steps,
            phi,
            phi_min,
        };
        for s in &m.steps {
            if s.bounded && m.phi.eval(&s.v) <= Q::from(0) {
                return Err(Error::InvalidModel(format!("step {} is not bounded", s.v)));
            }
            if s.shift_closed {
                if let Some(x) = m.shift_witness(&s.v) {
                    return Err(Error::InvalidModel(format!(
                        "{x} - {} leaves the support",
                        s.v
                    )));
                }
            }
        }
        Ok(m)
    }

    /// Like [`SupportModel::new`], but each flag is set to whether it holds.
    pub fn with_derived_flags(
        supp: impl IntoIterator<Item = RootVec>,
        steps: Vec<RootVec>,
        phi: RationalFunctional,
        phi_min: Q,
    ) -> Result<Self> {
        let mut m = SupportModel::new(supp, vec![], phi, phi_min)?;
        m.steps = steps
            .into_iter()
            .map(|v| {
                let bounded = m.phi.eval(&v) > Q::from(0);
                let shift_closed = m.shift_witness(&v).is_none();
                Step {
                    v,
                    bounded,
                    shift_closed,
                }
            })
            .collect();
        Ok(m)
    }

    fn shift_witness(&self, s: &RootVec) -> Option<&RootVec> {
        self.supp.iter().find(|x| {
            let y = *x - s;
            self.phi.eval(&y) >= self.phi_min && !self.set.contains(&y)
        })
    }

    pub fn supp(&self) -> &[RootVec] {
        &self.supp
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.supp.len()
    }

    pub fn is_empty(&self) -> bool {
        self.supp.is_empty()
    }

    pub fn contains(&self, x: &RootVec) -> bool {
        self.set.contains(x)
    }

    /// `(λ + span_{≥0} S) ∩ supp = {λ}`, checked by walking every nonzero
    /// combination up to the top of the support.
    pub fn is_extremal(&self, lam: &RootVec) -> bool {
        let mut memo = HashMap::new();
        self.contains(lam)
            && self
                .steps
                .iter()
                .all(|s| !self.reaches(&(lam + &s.v), &mut memo))
    }

    fn top(&self) -> Q {
        self.supp
            .iter()
            .map(|x| self.phi.eval(x))
            .max()
            .unwrap_or(self.phi_min)
    }

    /// Whether some `μ + c`, `c` a nonnegative combination, is in the support.
    fn reaches(&self, mu: &RootVec, memo: &mut HashMap<RootVec, bool>) -> bool {
        let top = self.top();
        let mut stack = vec![(mu.clone(), false)];
        while let Some((x, expanded)) = stack.pop() {
            if memo.contains_key(&x) {
                continue;
            }
            if self.contains(&x) {
                memo.insert(x, true);
                continue;
            }
            if self.phi.eval(&x) > top {
                memo.insert(x, false);
                continue;
            }
            let next: Vec<RootVec> = self.steps.iter().map(|s| &x + &s.v).collect();
            if expanded {
                let hit = next.iter().any(|y| memo.get(y) == Some(&true));
                memo.insert(x, hit);
            } else {
                stack.push((x, true));
                stack.extend(
                    next.into_iter()
                        .filter(|y| !memo.contains_key(y))
                        .map(|y| (y, false)),
                );
            }
        }
        memo[mu]
    }
}

/// The set left after the iterated refinement
/// `𝒜_0 = supp`, `𝒜_{t+1} = {λ ∈ 𝒜_t : λ + β_{t+1} ∉ supp}`. Steps not
/// known to be shift-closed use full reachability instead of a single
/// shift.
pub fn extremal_set(model: &SupportModel) -> Result<Vec<RootVec>> {
    if let Some(s) = model.steps.iter().find(|s| !s.bounded) {
        return Err(Error::InvalidModel(format!(
            "step {} not known to be bounded",
            s.v
        )));
    }
    let mut a: Vec<RootVec> = model.supp.clone();
    let mut memo = HashMap::new();
    for s in &model.steps {
        a.retain(|lam| {
            let up = lam + &s.v;
            if s.shift_closed {
                !model.contains(&up)
            } else {
                !model.reaches(&up, &mut memo)
            }
        });
    }
    Ok(a)
}

/// The lexicographically least element of [`extremal_set`].
pub fn extremal_weight(model: &SupportModel) -> Result<RootVec> {
    if model.is_empty() {
        return Err(Error::InvalidModel("empty support".into()));
    }
    extremal_set(model)?
        .into_iter()
        .min()
        .ok_or_else(|| Error::InvalidModel("no extremal weight".into()))
}

/// Every element of the support checked directly against the definition.
pub fn oracle_extremal_set(model: &SupportModel) -> Vec<RootVec> {
    model
        .supp
        .iter()
        .filter(|x| model.is_extremal(x))
        .cloned()
        .collect()
}

/// A random support: a union of translated negative cones of the steps,
/// cut at the floor, sometimes thinned at random. At most `10⁴` points.
pub fn random_model(seed: u64) -> SupportModel {
    const CAP: usize = 10_000;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (k, l) = (1 + rng.gen_range(0..2), 1);
    let mut phi = RationalFunctional::zero(k, l);
    phi.z_d = Q::from(1);
    let n_steps = rng.gen_range(1..=3);
    let steps: Vec<RootVec> = (0..n_steps)
        .map(|_| {
            let d = rng.gen_range(1..=3);
            let e = (0..k).map(|_| rng.gen_range(-2..=2)).collect();
            let f = (0..l).map(|_| rng.gen_range(-2..=2)).collect();
            RootVec::new(d, e, f)
        })
        .collect();
    let mut supp: HashSet<RootVec> = HashSet::new();
    for _ in 0..rng.gen_range(1..=4) {
        let g = RootVec::new(
            rng.gen_range(0..=14),
            (0..k).map(|_| rng.gen_range(-4..=4)).collect(),
            (0..l).map(|_| rng.gen_range(-4..=4)).collect(),
        );
        let mut cone = vec![g.clone()];
        let mut seen: HashSet<RootVec> = HashSet::from([g]);
        while let Some(x) = cone.pop() {
            if supp.len() + seen.len() >= CAP {
                break;
            }
            for s in &steps {
                let y = &x - s;
                if y.d >= 0 && seen.insert(y.clone()) {
                    cone.push(y);
                }
            }
        }
        supp.extend(seen);
        if supp.len() >= CAP {
            break;
        }
    }
    let mut supp: Vec<RootVec> = supp.into_iter().collect();
    supp.sort();
    supp.truncate(CAP);
    if rng.gen_bool(0.5) {
        let keep = rng.gen_range(0.3..0.9);
        supp.retain(|_| rng.gen_bool(keep));
        if supp.is_empty() {
            supp.push(RootVec::zero(k, l));
        }
    }
    SupportModel::with_derived_flags(supp, steps, phi, Q::from(0))
        .expect("generated above the floor")
}
