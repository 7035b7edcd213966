//! Tight/hybrid classification of `ℜ_1`, `ℜ_2`, the parabolic sets `P_i`,
//! and the functional ζ with `P_1 ∪ P_2 = {ζ ≥ 0}`.

use super::{Label, Pattern, ShadowLabeling};
use crate::error::{Error, Result};
use crate::lattice::{solve_q, RationalFunctional, RootClass, RootVec, Q};
use crate::par;
use crate::rootsys::{
    affine_base_with, canonical_positive, class_of, contains, enumerate, even_levels,
    subsystem_data, theta_coefficients, AlgebraType, BaseData, Parity, Shape, Subsystem, Window,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    Up,
    Down,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SubsystemTag {
    Tight,
    UpHybrid,
    DownHybrid,
}

impl SubsystemTag {
    pub fn orientation(self) -> Option<Orientation> {
        match self {
            SubsystemTag::Tight => None,
            SubsystemTag::UpHybrid => Some(Orientation::Up),
            SubsystemTag::DownHybrid => Some(Orientation::Down),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub tags: [SubsystemTag; 2],
    /// False exactly for one up- and one down-nilpotent hybrid subsystem.
    pub compatible: bool,
}

/// Tag each `ℜ_i` by the patterns of its directions.
pub fn classify_subsystems(l: &ShadowLabeling) -> Result<Classification> {
    let mut tags = [SubsystemTag::Tight; 2];
    for i in 1..=2 {
        let sub = subsystem_data(&l.ty, i);
        let pats: Vec<Pattern> = sub
            .gradients()
            .iter()
            .map(|g| l.pattern(g).expect("total labeling"))
            .collect();
        tags[i - 1] = if pats.iter().any(|p| p.is_full()) {
            SubsystemTag::Tight
        } else if pats
            .iter()
            .all(|p| matches!(p, Pattern::HybridUpNilpotent(_)))
        {
            SubsystemTag::UpHybrid
        } else if pats
            .iter()
            .all(|p| matches!(p, Pattern::HybridUpInjective(_)))
        {
            SubsystemTag::DownHybrid
        } else {
            return Err(Error::MixedOrientation(i));
        };
    }
    let o: Vec<Option<Orientation>> = tags.iter().map(|t| t.orientation()).collect();
    let compatible = !matches!((o[0], o[1]), (Some(a), Some(b)) if a != b);
    Ok(Classification { tags, compatible })
}

/// Membership in `P_i`: `ln ∪ -in` plus the imaginary roots on the side
/// given by the orientation.
pub fn in_parabolic(l: &ShadowLabeling, sub: &Subsystem, o: Orientation, x: &RootVec) -> bool {
    if !sub.contains(x) {
        return false;
    }
    if x.is_in_z_delta() {
        return match o {
            Orientation::Up => x.d >= 0,
            Orientation::Down => x.d <= 0,
        };
    }
    let lab = |y: &RootVec| l.pattern(&y.gradient()).map(|p| p.at(y.d));
    lab(x) == Some(Label::Ln) || lab(&-x) == Some(Label::In)
}

#[derive(Debug, Clone, Serialize)]
pub struct Parabolic {
    pub i: usize,
    pub orientation: Orientation,
    pub members: Vec<RootVec>,
    /// `P ∪ -P` is all of `ℜ_i` on the window.
    pub covers: bool,
    /// `(P + P) ∩ ℜ_i ⊆ P` on the window.
    pub closed: bool,
    /// `s_i δ ∈ P ∖ -P` (up) or `-s_i δ ∈ P ∖ -P` (down).
    pub proper: bool,
    pub witness: Option<String>,
}

impl Parabolic {
    pub fn passed(&self) -> bool {
        self.covers && self.closed && self.proper
    }
}

pub fn build_parabolic(l: &ShadowLabeling, i: usize, w: Window) -> Result<Parabolic> {
    let c = classify_subsystems(l)?;
    let o = c.tags[i - 1].orientation().ok_or(Error::Tight(i))?;
    let sub = subsystem_data(&l.ty, i);
    let roots: Vec<RootVec> = sub.view(w).roots().cloned().collect();
    let p = |x: &RootVec| in_parabolic(l, &sub, o, x);
    let members: Vec<RootVec> = roots.iter().filter(|x| p(x)).cloned().collect();
    let mut witness = None;
    let uncovered = roots.iter().find(|x| !p(x) && !p(&-*x));
    if let Some(x) = uncovered {
        witness = Some(format!("{x} and its negative both outside P"));
    }
    let bad: Vec<String> = par::range_flat_map(members.len(), |a| {
        members
            .iter()
            .filter_map(|b| {
                let s = &members[a] + b;
                (sub.contains(&s) && !p(&s))
                    .then(|| format!("{} + {b} = {s} outside P", members[a]))
            })
            .take(1)
            .collect()
    });
    if witness.is_none() {
        witness = bad.first().cloned();
    }
    let sd = l.ty.delta(match o {
        Orientation::Up => sub.s,
        Orientation::Down => -sub.s,
    });
    let proper = p(&sd) && !p(&-&sd);
    if witness.is_none() && !proper {
        witness = Some(format!("{sd} not strictly inside P"));
    }
    Ok(Parabolic {
        i,
        orientation: o,
        members,
        covers: uncovered.is_none(),
        closed: bad.is_empty(),
        proper,
        witness,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ZetaCase {
    /// both affine nodes in `P ∩ -P`
    One,
    /// both in `P ∖ -P`
    Two,
    /// first in `P ∖ -P`, second in `P ∩ -P`
    Three,
    /// first in `P ∩ -P`, second in `P ∖ -P`
    Four,
}

impl ZetaCase {
    pub fn number(self) -> u8 {
        match self {
            ZetaCase::One => 1,
            ZetaCase::Two => 2,
            ZetaCase::Three => 3,
            ZetaCase::Four => 4,
        }
    }

    /// `ζ(s_2 δ - θ_2)` prescribed for this case, with `s = s_2 / s_1`.
    pub fn expected_value(self, s: Q) -> Q {
        match self {
            ZetaCase::One | ZetaCase::Three => Q::from(0),
            ZetaCase::Two => s,
            ZetaCase::Four => Q::new(1, 2),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ZetaConstruction {
    /// The functional for the given labeling.
    pub zeta: RationalFunctional,
    /// The functional for the up-nilpotent representative; equals `zeta`
    /// when the labeling is already up-nilpotent.
    pub up_zeta: RationalFunctional,
    pub orientation: Orientation,
    pub case: ZetaCase,
    /// `s_2 / s_1`
    #[serde(serialize_with = "crate::lattice::ser_q")]
    pub s: Q,
    /// Bases used, in the up-nilpotent representative.
    pub bases: [BaseData; 2],
    /// Number of finite base elements of `Π_1`, `Π_2` in `P ∖ -P`.
    pub t: usize,
    pub k: usize,
    /// `up_zeta(s_2 δ - θ_2)`
    #[serde(serialize_with = "crate::lattice::ser_q")]
    pub case_value: Q,
}

struct Side {
    sub: Subsystem,
    base: BaseData,
    coeffs: Vec<Q>,
    strict: Vec<bool>,
    node_strict: bool,
}

fn side(l: &ShadowLabeling, i: usize) -> Result<Side> {
    let sub = subsystem_data(&l.ty, i);
    let p = |x: &RootVec| in_parabolic(l, &sub, Orientation::Up, x);
    let positive = |x: &RootVec| p(x) && (!p(&-x) || canonical_positive(x));
    let base = affine_base_with(&sub, &positive)?;
    let coeffs = theta_coefficients(&sub, &base)
        .ok_or_else(|| Error::NoBase("θ outside the base span".into()))?;
    let strict: Vec<bool> = base.finite_base.iter().map(|b| !p(&-b)).collect();
    let node = base.affine_base.last().unwrap();
    let node_strict = !p(&-node);
    Ok(Side {
        sub,
        base,
        coeffs,
        strict,
        node_strict,
    })
}

/// Values on `B_i` that are `c / coeff` on strict elements, `0` elsewhere.
fn spread(side: &Side, c: Q) -> Vec<Q> {
    side.coeffs
        .iter()
        .zip(&side.strict)
        .map(|(r, &st)| if st { c / *r } else { Q::from(0) })
        .collect()
}

fn zeta_up(l: &ShadowLabeling) -> Result<ZetaConstruction> {
    let one = side(l, 1)?;
    let two = side(l, 2)?;
    let s = Q::new(two.sub.s, one.sub.s);
    let t = one.strict.iter().filter(|b| **b).count();
    let k = two.strict.iter().filter(|b| **b).count();
    let (tq, kq) = (Q::from(t as i64), Q::from(k as i64));
    let case = match (one.node_strict, two.node_strict) {
        (false, false) => ZetaCase::One,
        (true, true) => ZetaCase::Two,
        (true, false) => ZetaCase::Three,
        (false, true) => ZetaCase::Four,
    };
    let half = Q::new(1, 2);
    let unit = Q::from(1);
    // ζ(α_0), the total ζ(θ_1), the total ζ(θ_2)
    let (a0, th1, th2) = match case {
        ZetaCase::One => (Q::from(0), unit / s, unit),
        ZetaCase::Two => match (t, k) {
            (0, 0) => (unit, Q::from(0), Q::from(0)),
            (0, _) => (unit + unit / s, Q::from(0), unit),
            (_, 0) => (half, half, Q::from(0)),
            _ => (unit, unit / s, unit),
        },
        ZetaCase::Three => {
            if k == 0 {
                return Err(Error::NoBase("Π_2 lies in P ∩ -P".into()));
            }
            if t == 0 {
                (unit / s, Q::from(0), unit)
            } else {
                (unit / s, unit / s, Q::from(2))
            }
        }
        ZetaCase::Four => {
            if t == 0 {
                return Err(Error::NoBase("Π_1 lies in P ∩ -P".into()));
            }
            if k == 0 {
                (Q::from(0), unit / (Q::from(2) * s), Q::from(0))
            } else {
                (Q::from(0), unit / s, half)
            }
        }
    };
    let va = if t > 0 {
        spread(&one, th1 / tq)
    } else {
        vec![Q::from(0); one.coeffs.len()]
    };
    let vb = if k > 0 {
        spread(&two, th2 / kq)
    } else {
        vec![Q::from(0); two.coeffs.len()]
    };

    let mut rows: Vec<Vec<Q>> = vec![];
    let mut rhs: Vec<Q> = vec![];
    for (b, v) in one.base.finite_base.iter().zip(&va) {
        rows.push(b.coords().into_iter().map(Q::from).collect());
        rhs.push(*v);
    }
    rows.push(
        one.base
            .affine_base
            .last()
            .unwrap()
            .coords()
            .into_iter()
            .map(Q::from)
            .collect(),
    );
    rhs.push(a0);
    for (b, v) in two.base.finite_base.iter().zip(&vb) {
        rows.push(b.coords().into_iter().map(Q::from).collect());
        rhs.push(*v);
    }
    let z = solve_q(&rows, &rhs).ok_or_else(|| Error::NoBase("Π_1 ∪ B_2 is not a basis".into()))?;
    let zeta = RationalFunctional::from_coords(l.ty.k, l.ty.l, &z);
    let case_value = zeta.eval(two.base.affine_base.last().unwrap());
    Ok(ZetaConstruction {
        zeta: zeta.clone(),
        up_zeta: zeta,
        orientation: Orientation::Up,
        case,
        s,
        bases: [one.base, two.base],
        t,
        k,
        case_value,
    })
}

/// The functional of the both-hybrid construction.
pub fn build_zeta(l: &ShadowLabeling) -> Result<ZetaConstruction> {
    let c = classify_subsystems(l)?;
    for (i, t) in c.tags.iter().enumerate() {
        if *t == SubsystemTag::Tight {
            return Err(Error::Tight(i + 1));
        }
    }
    if !c.compatible {
        return Err(Error::Incompatible);
    }
    match c.tags[0].orientation().unwrap() {
        Orientation::Up => zeta_up(l),
        Orientation::Down => {
            let mut z = zeta_up(&l.negated())?;
            z.zeta = z.up_zeta.negated();
            z.orientation = Orientation::Down;
            Ok(z)
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ZetaCheck {
    pub name: &'static str,
    pub witness: Option<String>,
}

/// Check the conclusions of the construction on the window.
pub fn verify_zeta(l: &ShadowLabeling, z: &ZetaConstruction, w: Window) -> Vec<ZetaCheck> {
    let ty = l.ty;
    let mut out = vec![];
    let zero = Q::from(0);
    out.push(ZetaCheck {
        name: "delta-positive",
        witness: (z.up_zeta.z_d <= zero).then(|| format!("ζ(δ) = {}", z.up_zeta.z_d)),
    });
    let expect = z.case.expected_value(z.s);
    out.push(ZetaCheck {
        name: "case-value",
        witness: (z.case_value != expect).then(|| {
            format!(
                "ζ(s₂δ-θ₂) = {}, case {} wants {expect}",
                z.case_value,
                z.case.number()
            )
        }),
    });
    let orient = z.orientation;
    let subs = [subsystem_data(&ty, 1), subsystem_data(&ty, 2)];
    let mut sign = None;
    let mut cover = None;
    for sub in &subs {
        for x in sub.view(w).roots() {
            if x.is_zero() {
                continue;
            }
            let v = z.zeta.eval(x);
            if !x.is_in_z_delta() && sign.is_none() {
                let lab = l.pattern(&x.gradient()).unwrap().at(x.d);
                if (v > zero && lab != Label::Ln) || (v < zero && lab != Label::In) {
                    sign = Some(format!("ζ({x}) = {v} but label {}", lab.tag()));
                }
            }
            let in_p = subs.iter().any(|s| in_parabolic(l, s, orient, x));
            if in_p != (v >= zero) && cover.is_none() {
                cover = Some(format!("{x}: ζ = {v}, in P = {in_p}"));
            }
        }
    }
    out.push(ZetaCheck {
        name: "signs-match-labels",
        witness: sign,
    });
    out.push(ZetaCheck {
        name: "P-equals-nonnegative",
        witness: cover,
    });
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DecompTarget {
    Full,
    Even,
}

#[derive(Debug, Clone, Serialize)]
pub struct TriangularDecomposition {
    pub zeta: RationalFunctional,
    pub target: DecompTarget,
    pub plus: Vec<RootVec>,
    pub zero: Vec<RootVec>,
    pub minus: Vec<RootVec>,
    #[serde(skip)]
    ty: Option<AlgebraType>,
}

impl TriangularDecomposition {
    pub fn is_trivial(&self) -> bool {
        self.plus.is_empty() && self.minus.is_empty()
    }

    fn member(&self, x: &RootVec) -> bool {
        let ty = self.ty.expect("built by triangular_decompose");
        in_target(&ty, self.target, x)
    }

    /// `P := plus ∪ zero` covers with its negative and is closed under
    /// sums landing in the target, on the window.
    pub fn is_parabolic(&self) -> bool {
        let zero = Q::from(0);
        let p: Vec<&RootVec> = self.plus.iter().chain(&self.zero).collect();
        let in_p = |x: &RootVec| self.member(x) && self.zeta.eval(x) >= zero;
        let covers = self.minus.iter().all(|x| in_p(&-x));
        covers
            && p.iter().all(|a| {
                p.iter().all(|b| {
                    let s = *a + *b;
                    !self.member(&s) || in_p(&s)
                })
            })
    }
}

fn in_target(ty: &AlgebraType, target: DecompTarget, x: &RootVec) -> bool {
    if !contains(ty, x) {
        return false;
    }
    match target {
        DecompTarget::Full => true,
        DecompTarget::Even => {
            if x.is_in_z_delta() {
                even_levels(ty, Shape::Zero).contains(x.d)
            } else {
                crate::rootsys::parity(ty, x).ok() == Some(Parity::Even)
            }
        }
    }
}

pub fn triangular_decompose(
    zeta: &RationalFunctional,
    ty: &AlgebraType,
    w: Window,
    target: DecompTarget,
) -> TriangularDecomposition {
    let zero = Q::from(0);
    let mut out = TriangularDecomposition {
        zeta: zeta.clone(),
        target,
        plus: vec![],
        zero: vec![],
        minus: vec![],
        ty: Some(*ty),
    };
    for x in enumerate(ty, w).roots() {
        if !in_target(ty, target, x) {
            continue;
        }
        let v = zeta.eval(x);
        if v > zero {
            out.plus.push(x.clone());
        } else if v < zero {
            out.minus.push(x.clone());
        } else {
            out.zero.push(x.clone());
        }
    }
    let _ = class_of(&ty.zero()) == RootClass::Zero;
    out
}

#[cfg(test)]
mod tests {
    use super::super::{synth_labeling, SynthKind};
    use super::*;
    use crate::rootsys::Family;

    #[test]
    fn up_labelings_give_zeta() {
        for f in Family::ALL {
            for (k, l) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
                let Ok(t) = AlgebraType::new(f, k, l) else {
                    continue;
                };
                for seed in 0..6 {
                    for kind in [SynthKind::AllUp, SynthKind::AllDown] {
                        let lab = synth_labeling(&t, seed, kind);
                        let z = build_zeta(&lab).unwrap_or_else(|e| panic!("{t} seed {seed}: {e}"));
                        for c in verify_zeta(&lab, &z, Window::new(6)) {
                            assert!(
                                c.witness.is_none(),
                                "{t} seed {seed} {kind:?}: {} {:?}",
                                c.name,
                                c.witness
                            );
                        }
                        for i in 1..=2 {
                            let p = build_parabolic(&lab, i, Window::new(6)).unwrap();
                            assert!(p.passed(), "{t} seed {seed} i={i}: {:?}", p.witness);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn tight_is_refused() {
        let t = AlgebraType::new(Family::D, 2, 2).unwrap();
        let lab = synth_labeling(&t, 5, SynthKind::MixedTight);
        let c = classify_subsystems(&lab).unwrap();
        assert!(c.tags.contains(&SubsystemTag::Tight));
        assert!(matches!(build_zeta(&lab), Err(Error::Tight(_))));
    }

    #[test]
    fn decompositions() {
        let t = AlgebraType::new(Family::AEvenOdd, 1, 1).unwrap();
        let w = Window::new(3);
        let zero = RationalFunctional::zero(1, 1);
        assert!(triangular_decompose(&zero, &t, w, DecompTarget::Full).is_trivial());
        let mut z = RationalFunctional::zero(1, 1);
        z.z_d = Q::from(1);
        z.z_e[0] = Q::new(1, 3);
        let d = triangular_decompose(&z, &t, w, DecompTarget::Full);
        assert!(d.plus.contains(&t.delta(1)));
        assert!(d.is_parabolic());
        assert!(triangular_decompose(&z, &t, w, DecompTarget::Even).is_parabolic());
    }
}
