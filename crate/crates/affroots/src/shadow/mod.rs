//! Shadow labelings of real roots: per-direction patterns, the closure
//! axioms, string classification, and the parabolic and ζ constructions
//! built on top of them.

mod parabolic;
pub mod support;

pub use parabolic::{
    build_parabolic, build_zeta, classify_subsystems, in_parabolic, triangular_decompose,
    verify_zeta, Classification, DecompTarget, Orientation, Parabolic, SubsystemTag,
    TriangularDecomposition, ZetaCase, ZetaConstruction,
};
pub use support::{
    extremal_set, extremal_weight, oracle_extremal_set, random_model, Step, SupportModel,
};

use crate::error::{Error, Result};
use crate::lattice::RootClass;
use crate::lattice::{reflect, RationalFunctional, RootVec, Q};
use crate::par;
use crate::rootsys::{
    class_of, contains, directions, enumerate, root_levels, shape_of, AlgebraType, Progression,
    Window,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    /// locally nilpotent
    Ln,
    /// injective
    In,
}

impl Label {
    pub fn tag(self) -> &'static str {
        match self {
            Label::Ln => "ln",
            Label::In => "in",
        }
    }
}

/// Labels along one δ-string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pattern {
    FullLn,
    FullIn,
    /// Levels `≥ b` are `in`, levels `< b` are `ln`.
    HybridUpInjective(i64),
    /// Levels `≥ b` are `ln`, levels `< b` are `in`.
    HybridUpNilpotent(i64),
}

impl Pattern {
    pub fn at(self, d: i64) -> Label {
        match self {
            Pattern::FullLn => Label::Ln,
            Pattern::FullIn => Label::In,
            Pattern::HybridUpInjective(b) => {
                if d >= b {
                    Label::In
                } else {
                    Label::Ln
                }
            }
            Pattern::HybridUpNilpotent(b) => {
                if d >= b {
                    Label::Ln
                } else {
                    Label::In
                }
            }
        }
    }

    pub fn is_full(self) -> bool {
        matches!(self, Pattern::FullLn | Pattern::FullIn)
    }

    /// The string case this pattern produces.
    pub fn case(self) -> PatternCase {
        match self {
            Pattern::FullLn => PatternCase::AllLn,
            Pattern::FullIn => PatternCase::AllIn,
            Pattern::HybridUpInjective(b) => PatternCase::LnThenIn(b),
            Pattern::HybridUpNilpotent(b) => PatternCase::InThenLn(b),
        }
    }
}

/// Result of reading a labeled δ-string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PatternCase {
    /// case (i)
    AllLn,
    /// case (ii)
    AllIn,
    /// case (iii), with the level of the first `in`
    LnThenIn(i64),
    /// case (iv), with the level of the first `ln`
    InThenLn(i64),
    Inconsistent,
}

/// Classify one string. Entries may come in any order but must share a
/// direction.
pub fn pattern_of(labels: &[(RootVec, Label)]) -> PatternCase {
    let mut v: Vec<(i64, Label)> = labels.iter().map(|(r, l)| (r.d, *l)).collect();
    v.sort_by_key(|(d, _)| *d);
    let changes: Vec<usize> = (1..v.len()).filter(|&i| v[i].1 != v[i - 1].1).collect();
    match changes.as_slice() {
        [] if v.is_empty() => PatternCase::Inconsistent,
        [] => match v[0].1 {
            Label::Ln => PatternCase::AllLn,
            Label::In => PatternCase::AllIn,
        },
        [i] => match v[*i].1 {
            Label::In => PatternCase::LnThenIn(v[*i].0),
            Label::Ln => PatternCase::InThenLn(v[*i].0),
        },
        _ => PatternCase::Inconsistent,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowLabeling {
    pub ty: AlgebraType,
    patterns: BTreeMap<RootVec, Pattern>,
}

/// Level-0 real directions of `R`.
pub fn real_directions(ty: &AlgebraType) -> Vec<RootVec> {
    directions(ty)
        .into_iter()
        .filter(|g| g.norm() != 0)
        .collect()
}

fn string_of(ty: &AlgebraType, g: &RootVec) -> Progression {
    root_levels(ty, shape_of(g).expect("direction has a shape"))
}

impl ShadowLabeling {
    /// Build from patterns, checking that `±α̇` are linked as the string
    /// theorem requires.
    pub fn from_patterns(ty: AlgebraType, patterns: BTreeMap<RootVec, Pattern>) -> Result<Self> {
        let l = Self::from_patterns_unchecked(ty, patterns);
        if let Some(g) = l.unlinked_direction() {
            return Err(Error::Shape(format!("patterns of ±{g} are not linked")));
        }
        Ok(l)
    }

    /// No linkage check; for building counterexamples.
    pub fn from_patterns_unchecked(ty: AlgebraType, patterns: BTreeMap<RootVec, Pattern>) -> Self {
        ShadowLabeling { ty, patterns }
    }

    pub fn patterns(&self) -> &BTreeMap<RootVec, Pattern> {
        &self.patterns
    }

    pub fn pattern(&self, g: &RootVec) -> Option<Pattern> {
        self.patterns.get(g).copied()
    }

    pub fn set_pattern(&mut self, g: RootVec, p: Pattern) {
        self.patterns.insert(g, p);
    }

    /// Step of the string through `g`.
    pub fn step(&self, g: &RootVec) -> i64 {
        string_of(&self.ty, g).step().unwrap_or(1)
    }

    fn unlinked_direction(&self) -> Option<RootVec> {
        for (g, p) in &self.patterns {
            let Some(q) = self.patterns.get(&-g) else {
                return Some(g.clone());
            };
            let s = self.step(g);
            let ok = match (*p, q) {
                (a, b) if a.is_full() && b.is_full() => true,
                (Pattern::HybridUpInjective(b), Pattern::HybridUpInjective(b2))
                | (Pattern::HybridUpNilpotent(b), Pattern::HybridUpNilpotent(b2)) => {
                    [-b, -b + s, -b + 2 * s].contains(b2)
                }
                _ => false,
            };
            if !ok {
                return Some(g.clone());
            }
        }
        None
    }

    pub fn label_of(&self, beta: &RootVec) -> Result<Label> {
        if class_of(beta) != RootClass::Real || !contains(&self.ty, beta) {
            return Err(Error::NotReal(beta.clone()));
        }
        self.label_unchecked(beta)
            .ok_or_else(|| Error::NotReal(beta.clone()))
    }

    fn label_unchecked(&self, beta: &RootVec) -> Option<Label> {
        self.patterns.get(&beta.gradient()).map(|p| p.at(beta.d))
    }

    /// The labeling `α ↦ L(-α)`. It swaps the two hybrid orientations.
    pub fn negated(&self) -> ShadowLabeling {
        let mut out = BTreeMap::new();
        for g in self.patterns.keys() {
            let p = self.patterns[&-g];
            let prog = string_of(&self.ty, g);
            // L'(g + dδ) = L(-g - dδ)
            let q = match p {
                Pattern::FullLn | Pattern::FullIn => p,
                Pattern::HybridUpInjective(b) => Pattern::HybridUpNilpotent(
                    prog.first_at_least(-b + 1).expect("nonempty string"),
                ),
                Pattern::HybridUpNilpotent(b) => Pattern::HybridUpInjective(
                    prog.first_at_least(-b + 1).expect("nonempty string"),
                ),
            };
            out.insert(g.clone(), q);
        }
        ShadowLabeling {
            ty: self.ty,
            patterns: out,
        }
    }

    /// Labeled string through `g` inside the window.
    pub fn string_labels(&self, g: &RootVec, w: Window) -> Vec<(RootVec, Label)> {
        let p = self.patterns[g];
        string_of(&self.ty, g)
            .levels(-w.n, w.n)
            .into_iter()
            .map(|d| (g.at_level(d), p.at(d)))
            .collect()
    }

    /// Read every string back with [`pattern_of`] and compare with the
    /// generating pattern. Cuts outside the window read as full strings.
    pub fn roundtrip_witness(&self, w: Window) -> Option<String> {
        for (g, p) in &self.patterns {
            let labels = self.string_labels(g, w);
            let want = match p {
                Pattern::HybridUpInjective(b) | Pattern::HybridUpNilpotent(b)
                    if labels.iter().any(|(x, _)| x.d < *b)
                        && labels.iter().any(|(x, _)| x.d >= *b) =>
                {
                    p.case()
                }
                _ => match labels.first().map(|(_, l)| *l) {
                    Some(Label::Ln) => PatternCase::AllLn,
                    Some(Label::In) => PatternCase::AllIn,
                    None => continue,
                },
            };
            let got = pattern_of(&labels);
            if got != want {
                return Some(format!("{g}: generated {p:?}, read back {got:?}"));
            }
        }
        None
    }

    /// Whether the real root lies in `K_1` (eventually `ln` upward).
    pub fn in_k1(&self, beta: &RootVec) -> bool {
        matches!(
            self.patterns.get(&beta.gradient()),
            Some(Pattern::FullLn | Pattern::HybridUpNilpotent(_))
        )
    }
}

impl fmt::Display for ShadowLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (g, p) in &self.patterns {
            writeln!(f, "{g}: {p:?}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SynthKind {
    AllUp,
    AllDown,
    MixedTight,
}

impl SynthKind {
    pub fn cli_name(self) -> &'static str {
        match self {
            SynthKind::AllUp => "all-up",
            SynthKind::AllDown => "all-down",
            SynthKind::MixedTight => "mixed-tight",
        }
    }

    pub fn from_cli_name(s: &str) -> Option<Self> {
        [SynthKind::AllUp, SynthKind::AllDown, SynthKind::MixedTight]
            .into_iter()
            .find(|k| k.cli_name() == s)
    }
}

fn random_functional(rng: &mut ChaCha8Rng, ty: &AlgebraType, z_d: i64) -> RationalFunctional {
    let mut draw = || Q::new(rng.gen_range(-4..=4), 2);
    let mut z = RationalFunctional::zero(ty.k, ty.l);
    z.z_d = Q::from(z_d);
    for x in z.z_e.iter_mut() {
        *x = draw();
    }
    for x in z.z_f.iter_mut() {
        *x = draw();
    }
    z
}

/// Pattern of the string through `g` under `α ↦ sign ζ(α)`, where
/// `ζ(δ) = ±1` and `zero_ln` decides the label where `ζ` vanishes.
fn pattern_from(
    zeta: &RationalFunctional,
    g: &RootVec,
    prog: Progression,
    zero_ln: bool,
) -> Pattern {
    let x = zeta.eval(g);
    let up = zeta.z_d > Q::from(0);
    // first level where the label flips to the upper one
    let cut = if up {
        // value x + d; upper label ln
        if zero_ln {
            (-x).ceil()
        } else {
            (-x).floor() + Q::from(1)
        }
    } else {
        // value x - d; upper label in
        if zero_ln {
            x.floor() + Q::from(1)
        } else {
            x.ceil()
        }
    };
    let b = prog
        .first_at_least(cut.to_integer())
        .expect("nonempty string");
    if up {
        Pattern::HybridUpNilpotent(b)
    } else {
        Pattern::HybridUpInjective(b)
    }
}

/// A random labeling of the requested kind. Labels come from the signs of
/// a random functional (lexicographic pair for `MixedTight`), so every
/// generated labeling satisfies the axioms.
pub fn synth_labeling(ty: &AlgebraType, seed: u64, kind: SynthKind) -> ShadowLabeling {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zero_ln: bool = rng.gen();
    let dirs = real_directions(ty);
    let mut patterns = BTreeMap::new();
    match kind {
        SynthKind::AllUp | SynthKind::AllDown => {
            let z = random_functional(&mut rng, ty, if kind == SynthKind::AllUp { 1 } else { -1 });
            for g in &dirs {
                patterns.insert(g.clone(), pattern_from(&z, g, string_of(ty, g), zero_ln));
            }
        }
        SynthKind::MixedTight => {
            let mut z1 = random_functional(&mut rng, ty, 0);
            while dirs.iter().all(|g| z1.eval(g) == Q::from(0)) {
                z1 = random_functional(&mut rng, ty, 0);
            }
            let z_d = if rng.gen::<bool>() { 1 } else { -1 };
            let z2 = random_functional(&mut rng, ty, z_d);
            for g in &dirs {
                let v = z1.eval(g);
                let p = if v > Q::from(0) {
                    Pattern::FullLn
                } else if v < Q::from(0) {
                    Pattern::FullIn
                } else {
                    pattern_from(&z2, g, string_of(ty, g), zero_ln)
                };
                patterns.insert(g.clone(), p);
            }
        }
    }
    ShadowLabeling { ty: *ty, patterns }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Axiom {
    /// every real root carries a label
    Totality,
    /// `ln + ln ⊂ ln`
    CloseSum,
    /// `ln + 2 ln ⊂ ln`
    CloseDouble,
    /// `in` is preserved by reflections through `α` with `±α` alike
    Reflection,
    /// no string pair of the excluded fourth shape
    Case4,
    /// `in + in ⊂ in`
    InjectiveSum,
    /// `α` and `2α` carry the same label
    Multiples,
    /// `K_1` and `K_2` are closed
    KClosed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<RootVec>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.witness.iter().map(|r| r.to_string()).collect();
        write!(f, "{:?}: ({})", self.axiom, w.join(", "))
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct AxiomReport {
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn first(&self, axiom: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }
}

/// Per axiom, at most this many witnesses are kept.
const MAX_WITNESSES: usize = 8;

/// Check every axiom on the real roots of the window.
pub fn check_axioms(l: &ShadowLabeling, w: Window) -> AxiomReport {
    let ty = l.ty;
    let view = enumerate(&ty, w);
    let real = view.real();
    let mut report = AxiomReport {
        checked: real.len(),
        violations: vec![],
    };
    let label = |x: &RootVec| l.label_unchecked(x);
    let is_real = |x: &RootVec| class_of(x) == RootClass::Real && contains(&ty, x);

    let push = |report: &mut AxiomReport, axiom: Axiom, found: Vec<Vec<RootVec>>| {
        for witness in found.into_iter().take(MAX_WITNESSES) {
            report.violations.push(Violation { axiom, witness });
        }
    };

    let missing: Vec<Vec<RootVec>> = real
        .iter()
        .filter(|x| label(x).is_none())
        .map(|x| vec![x.clone()])
        .collect();
    push(&mut report, Axiom::Totality, missing);
    if !report.passed() {
        return report;
    }
    let lab = |x: &RootVec| label(x).expect("total");

    let ln: Vec<RootVec> = real
        .iter()
        .filter(|x| lab(x) == Label::Ln)
        .cloned()
        .collect();
    let inj: Vec<RootVec> = real
        .iter()
        .filter(|x| lab(x) == Label::In)
        .cloned()
        .collect();

    let pairs =
        |a: &[RootVec],
         b: &[RootVec],
         bad: &(dyn Fn(&RootVec, &RootVec) -> Option<Vec<RootVec>> + Sync)| {
            par::range_flat_map(a.len(), |i| {
                b.iter()
                    .filter_map(|y| bad(&a[i], y))
                    .take(MAX_WITNESSES)
                    .collect()
            })
        };

    let f = pairs(&ln, &ln, &|a, b| {
        let s = a + b;
        (is_real(&s) && lab(&s) != Label::Ln).then(|| vec![a.clone(), b.clone(), s])
    });
    push(&mut report, Axiom::CloseSum, f);

    let f = pairs(&ln, &ln, &|a, b| {
        let s = a + &b.scaled(2);
        (is_real(&s) && lab(&s) != Label::Ln).then(|| vec![a.clone(), b.clone(), s])
    });
    push(&mut report, Axiom::CloseDouble, f);

    let f = pairs(&inj, &inj, &|a, b| {
        let s = a + b;
        (is_real(&s) && lab(&s) != Label::In).then(|| vec![a.clone(), b.clone(), s])
    });
    push(&mut report, Axiom::InjectiveSum, f);

    let mirrors: Vec<RootVec> = real
        .iter()
        .filter(|a| lab(a) == lab(&-*a))
        .cloned()
        .collect();
    let f = pairs(&mirrors, &real, &|a, g| {
        let r = reflect(g, a).ok()?;
        (is_real(&r) && (lab(g) == Label::In) != (lab(&r) == Label::In))
            .then(|| vec![a.clone(), g.clone(), r])
    });
    push(&mut report, Axiom::Reflection, f);

    let f: Vec<Vec<RootVec>> = real
        .iter()
        .filter_map(|g| {
            let s = ty.delta(l.step(&g.gradient()));
            let up = g + &s;
            let neg = -g;
            let down = &neg - &s;
            let shape = lab(g) == Label::Ln
                && is_real(&up)
                && lab(&up) == Label::In
                && lab(&neg) == Label::Ln
                && is_real(&down)
                && lab(&down) == Label::In;
            shape.then(|| vec![g.clone(), up, neg, down])
        })
        .collect();
    push(&mut report, Axiom::Case4, f);

    let f: Vec<Vec<RootVec>> = real
        .iter()
        .filter_map(|a| {
            let b = a.scaled(2);
            (is_real(&b) && lab(a) != lab(&b)).then(|| vec![a.clone(), b])
        })
        .collect();
    push(&mut report, Axiom::Multiples, f);

    let f = pairs(&real, &real, &|a, b| {
        let s = a + b;
        let same = l.in_k1(a) == l.in_k1(b);
        (same && is_real(&s) && l.in_k1(&s) != l.in_k1(a)).then(|| vec![a.clone(), b.clone(), s])
    });
    push(&mut report, Axiom::KClosed, f);

    report
}

/// Flip the direction of some real `β_1 + β_2` with `β_i` both `ln` to
/// `FullIn`. Returns the broken labeling and `(β_1, β_2)`.
pub fn inject_close_violation(
    l: &ShadowLabeling,
    w: Window,
) -> Option<(ShadowLabeling, RootVec, RootVec)> {
    let ty = l.ty;
    let real = enumerate(&ty, w).real();
    let ln: Vec<&RootVec> = real
        .iter()
        .filter(|x| l.label_unchecked(x) == Some(Label::Ln))
        .collect();
    for a in &ln {
        for b in &ln {
            let s = *a + *b;
            if class_of(&s) == RootClass::Real && contains(&ty, &s) {
                let mut bad = l.clone();
                bad.set_pattern(s.gradient(), Pattern::FullIn);
                return Some((bad, (*a).clone(), (*b).clone()));
            }
        }
    }
    None
}

/// Overwrite one direction pair with the excluded fourth shape:
/// `γ ln`, `γ + sδ in`, `-γ ln`, `-γ - sδ in`. Returns the labeling and `γ`.
pub fn inject_case4(l: &ShadowLabeling) -> (ShadowLabeling, RootVec) {
    let g = real_directions(&l.ty)
        .into_iter()
        .next()
        .expect("a real direction");
    let s = l.step(&g);
    let d = string_of(&l.ty, &g).first_at_least(0).unwrap();
    let gamma = g.at_level(d);
    let mut bad = l.clone();
    bad.set_pattern(g.clone(), Pattern::HybridUpInjective(d + s));
    bad.set_pattern(-&g, Pattern::HybridUpNilpotent(-d));
    (bad, gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    fn ty(f: Family, k: usize, l: usize) -> AlgebraType {
        AlgebraType::new(f, k, l).unwrap()
    }

    #[test]
    fn pattern_cases() {
        let t = ty(Family::AEvenOdd, 1, 1);
        let mk = |ls: &[Label]| -> Vec<(RootVec, Label)> {
            ls.iter()
                .enumerate()
                .map(|(i, l)| (t.eps(0, 1).at_level(i as i64), *l))
                .collect()
        };
        use Label::*;
        assert_eq!(pattern_of(&mk(&[Ln, Ln, Ln])), PatternCase::AllLn);
        assert_eq!(pattern_of(&mk(&[In, In])), PatternCase::AllIn);
        assert_eq!(
            pattern_of(&mk(&[Ln, Ln, Ln, Ln, In, In, In])),
            PatternCase::LnThenIn(4)
        );
        assert_eq!(pattern_of(&mk(&[In, Ln, Ln])), PatternCase::InThenLn(1));
        assert_eq!(pattern_of(&mk(&[In, Ln, In])), PatternCase::Inconsistent);
    }

    #[test]
    fn label_examples() {
        let t = ty(Family::AEvenOdd, 1, 1);
        let g = t.eps(0, 1);
        let mut m = BTreeMap::new();
        m.insert(g.clone(), Pattern::HybridUpInjective(1));
        m.insert(-&g, Pattern::HybridUpInjective(1));
        let l = ShadowLabeling::from_patterns_unchecked(t, m);
        assert_eq!(l.label_of(&g.at_level(2)).unwrap(), Label::In);
        assert_eq!(l.label_of(&g.at_level(0)).unwrap(), Label::Ln);
        assert!(l.label_of(&t.delta(1)).is_err());
    }

    #[test]
    fn synth_shapes() {
        let t = ty(Family::D, 2, 1);
        let up = synth_labeling(&t, 7, SynthKind::AllUp);
        assert!(up
            .patterns()
            .values()
            .all(|p| matches!(p, Pattern::HybridUpNilpotent(_))));
        let mixed = synth_labeling(&t, 7, SynthKind::MixedTight);
        assert!(mixed.patterns().values().any(|p| p.is_full()));
        assert_eq!(synth_labeling(&t, 7, SynthKind::AllUp), up);
        assert!(ShadowLabeling::from_patterns(t, up.patterns().clone()).is_ok());
    }

    #[test]
    fn negation_swaps_orientation() {
        let t = ty(Family::AEvenEven, 1, 1);
        let down = synth_labeling(&t, 3, SynthKind::AllDown);
        let n = down.negated();
        for g in n.patterns().keys() {
            for d in -6..=6 {
                let x = g.at_level(d);
                if contains(&t, &x) {
                    assert_eq!(n.label_of(&x).unwrap(), down.label_of(&-&x).unwrap());
                }
            }
        }
        assert_eq!(n.negated(), down);
    }

    #[test]
    fn injected_faults_detected() {
        let t = ty(Family::AEvenOdd, 1, 1);
        let w = Window::new(4);
        let l = synth_labeling(&t, 1, SynthKind::AllUp);
        assert!(check_axioms(&l, w).passed());
        let (bad, _, _) = inject_close_violation(&l, w).unwrap();
        assert!(check_axioms(&bad, w).has(Axiom::CloseSum));
        let (bad, g) = inject_case4(&l);
        let r = check_axioms(&bad, w);
        assert_eq!(r.first(Axiom::Case4).unwrap().witness[0], g);
    }
}
