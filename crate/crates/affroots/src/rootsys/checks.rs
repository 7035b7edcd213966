//! Exhaustive invariant checks over a window. Each returns a [`Check`]
//! whose witness is the first violation found.

use super::tables::{literal_even, literal_roots};
use super::{
    class_of, contains, directions, dot_quotient, even_levels, extension_sets, min_period, parity,
    subsystem_data, tables, AlgebraType, Family, LengthClass, Parity, Progression, RootSystemView,
    Shape,
};
use crate::lattice::{form, reflect, RootClass, RootSet, RootVec};
use crate::par;
use serde::Serialize;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    /// Number of cases examined.
    pub checked: usize,
    pub witness: Option<String>,
}

impl Check {
    fn new(name: &str, checked: usize, witness: Option<String>) -> Self {
        Check {
            name: name.to_string(),
            checked,
            witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// `enumerate` against the literal transcription, roots and even part.
pub fn table_oracle(view: &RootSystemView) -> Check {
    let (ty, n) = (view.ty, view.window.n);
    let ours: BTreeSet<RootVec> = view.roots().cloned().collect();
    let lit = literal_roots(ty.family, ty.k, ty.l, n);
    if let Some(x) = lit.symmetric_difference(&ours).next() {
        let side = if ours.contains(x) { "extra" } else { "missing" };
        return Check::new("table-oracle", ours.len(), Some(format!("{side} root {x}")));
    }
    let lit_even = literal_even(ty.family, ty.k, ty.l, n);
    for e in &view.entries {
        if e.root.is_in_z_delta() {
            continue;
        }
        if (e.parity == Parity::Even) != lit_even.contains(&e.root) {
            return Check::new(
                "table-oracle",
                ours.len(),
                Some(format!("parity of {} is {}", e.root, e.parity.tag())),
            );
        }
    }
    if let Some(x) = lit_even.iter().find(|x| !lit.contains(x)) {
        return Check::new(
            "table-oracle",
            ours.len(),
            Some(format!("even root {x} outside R")),
        );
    }
    Check::new("table-oracle", ours.len(), None)
}

/// Classes agree with the bilinear-form definitions.
pub fn partition(view: &RootSystemView) -> Check {
    let span = view.spanning();
    let bad = view.entries.iter().find(|e| {
        let x = &e.root;
        let ok = match e.class {
            RootClass::Zero => x.is_zero(),
            RootClass::Imaginary => {
                !x.is_zero() && span.iter().all(|b| form(x, b) == 0) && x.is_in_z_delta()
            }
            RootClass::Real => x.norm() != 0 && e.parity != Parity::Imaginary,
            RootClass::Nonsingular => {
                x.norm() == 0
                    && span.iter().any(|b| form(x, b) != 0)
                    && e.parity != Parity::Imaginary
            }
        };
        !ok || class_of(x) != e.class
    });
    Check::new(
        "partition",
        view.len(),
        bad.map(|e| format!("{} tagged {}", e.root, e.class.tag())),
    )
}

fn pairwise<F>(a: &[RootVec], b: &[RootVec], name: &str, bad: F) -> Check
where
    F: Fn(&RootVec, &RootVec) -> Option<String> + Sync,
{
    let found = par::range_flat_map(a.len(), |i| {
        b.iter()
            .filter_map(|y| bad(&a[i], y))
            .take(1)
            .collect::<Vec<_>>()
    });
    Check::new(name, a.len() * b.len(), found.into_iter().next())
}

/// Nonsingular + nonsingular, when a root, is real, imaginary or zero.
pub fn re_re(view: &RootSystemView) -> Check {
    let ty = view.ty;
    let ns = view.with_class(RootClass::Nonsingular);
    pairwise(&ns, &ns, "re-re", |a, b| {
        let s = a + b;
        (contains(&ty, &s) && class_of(&s) == RootClass::Nonsingular)
            .then(|| format!("{a} + {b} = {s} is nonsingular"))
    })
}

/// Nonsingular + real, when a root, is nonsingular. Only meaningful for
/// `A(2k-1,2l-1)^(2)`; other families pass vacuously.
pub fn ns_plus_re(view: &RootSystemView) -> Check {
    let ty = view.ty;
    if ty.family != Family::AOddOdd {
        return Check::new("ns+re", 0, None);
    }
    let ns = view.with_class(RootClass::Nonsingular);
    let re = view.real();
    pairwise(&ns, &re, "ns+re", |a, b| {
        let s = a + b;
        (contains(&ty, &s) && class_of(&s) != RootClass::Nonsingular)
            .then(|| format!("{a} + {b} = {s}"))
    })
}

/// Progressions for `R` (`S` sets) or `R_0` (`T` sets), together with the
/// period of the imaginary part.
fn strings(ty: &AlgebraType, even: bool) -> Vec<(RootVec, Progression)> {
    directions(ty)
        .into_iter()
        .filter(|g| g.norm() != 0)
        .map(|g| {
            let (s, t) = extension_sets(ty, &g).expect("directions are directions");
            (g, if even { t } else { s })
        })
        .collect()
}

/// Every string is a progression, and some real `α̇*` with `k = 0`
/// carries the imaginary period and divides every other step.
pub fn imp(ty: &AlgebraType) -> Check {
    let mut checked = 0;
    for even in [false, true] {
        let period = if even {
            even_levels(ty, Shape::Zero).step().unwrap()
        } else {
            1
        };
        let rows: Vec<(RootVec, Progression)> = strings(ty, even)
            .into_iter()
            .filter(|(_, p)| !p.is_empty())
            .collect();
        checked += rows.len();
        let steps: Vec<i64> = rows.iter().filter_map(|(_, p)| p.step()).collect();
        let star = rows
            .iter()
            .find(|(_, p)| matches!(p, Progression::Arith { r, k0: 0 } if *r == period));
        let label = if even { "R_0" } else { "R" };
        match star {
            None => {
                return Check::new(
                    "imp",
                    checked,
                    Some(format!("{label}: no direction with period {period}")),
                )
            }
            Some((g, _)) => {
                if let Some(r) = steps.iter().find(|r| **r % period != 0) {
                    return Check::new(
                        "imp",
                        checked,
                        Some(format!("{label}: step {r} not divisible by r({g})")),
                    );
                }
            }
        }
    }
    Check::new("imp", checked, None)
}

pub fn period(ty: &AlgebraType) -> Check {
    let r = min_period(ty);
    let want = if ty.family == Family::AEvenEven { 4 } else { 2 };
    Check::new(
        "min-period",
        1,
        (r != want).then(|| format!("min_period = {r}, expected {want}")),
    )
}

/// `r_α(β) ∈ R` for real `α` and every root `β` in the window.
pub fn reflection_closure(view: &RootSystemView) -> Check {
    let ty = view.ty;
    let real = view.real();
    let all: Vec<RootVec> = view.roots().cloned().collect();
    pairwise(&real, &all, "reflection", |a, b| match reflect(b, a) {
        Ok(r) if contains(&ty, &r) => None,
        Ok(r) => Some(format!("r_{{{a}}}({b}) = {r} not a root")),
        Err(e) => Some(format!("r_{{{a}}}({b}): {e}")),
    })
}

/// Nonzero non-imaginary even roots are exactly `ℜ_1 ∪ ℜ_2` minus `ℤδ`.
pub fn even_cover(view: &RootSystemView) -> Check {
    let ty = view.ty;
    let subs = [subsystem_data(&ty, 1), subsystem_data(&ty, 2)];
    for e in &view.entries {
        if e.root.is_in_z_delta() {
            continue;
        }
        let inside = subs.iter().any(|s| s.contains(&e.root));
        if inside != (e.parity == Parity::Even) {
            return Check::new(
                "even-cover",
                view.len(),
                Some(format!("{} ({})", e.root, e.parity.tag())),
            );
        }
    }
    for s in &subs {
        for e in &s.view(view.window).entries {
            if !e.root.is_zero() && e.root.is_in_z_delta() {
                if !contains(&ty, &e.root) {
                    return Check::new(
                        "even-cover",
                        view.len(),
                        Some(format!("{} not in R", e.root)),
                    );
                }
            } else if !e.root.is_zero() && parity(&ty, &e.root).ok() != Some(Parity::Even) {
                return Check::new(
                    "even-cover",
                    view.len(),
                    Some(format!("{} not even", e.root)),
                );
            }
        }
    }
    Check::new("even-cover", view.len(), None)
}

/// The three-step decomposition of any pair of nonsingular quotient
/// roots, for `A(2k-1,2l-1)^(2)`. Other families pass vacuously.
pub fn ns_decomposition(ty: &AlgebraType) -> Check {
    if ty.family != Family::AOddOdd {
        return Check::new("ns-decomposition", 0, None);
    }
    let q = dot_quotient(ty);
    let short = q.of_length(LengthClass::Short);
    let ns: BTreeSet<RootVec> = q.ns.iter().cloned().collect();
    let real = &q.real;
    let reach = |e: &RootVec, h: &RootVec| -> bool {
        for b1 in &short {
            let s1 = e + b1;
            if &s1 == h {
                return true;
            }
            if !ns.contains(&s1) {
                continue;
            }
            for b2 in real {
                let s2 = &s1 + b2;
                if &s2 == h {
                    return true;
                }
                if ns.contains(&s2) && real.contains(&(h - &s2)) {
                    return true;
                }
            }
        }
        false
    };
    let list: Vec<RootVec> = q.ns.clone();
    pairwise(&list, &list, "ns-decomposition", |e, h| {
        (!reach(e, h)).then(|| format!("{e} to {h}"))
    })
}

/// Every cell of the extension-set table.
pub fn extension_table(ty: &AlgebraType) -> Check {
    let col = tables::column(ty.family);
    let mut checked = 0;
    for row in tables::extension_table() {
        for g in (row.members)(ty.k, ty.l) {
            checked += 1;
            let (s, t) = match extension_sets(ty, &g) {
                Ok(x) => x,
                Err(e) => {
                    return Check::new(
                        "extension-sets",
                        checked,
                        Some(format!("{}: {e}", row.name)),
                    )
                }
            };
            if s != row.s[col] {
                return Check::new(
                    "extension-sets",
                    checked,
                    Some(format!("S({g}) = {s}, table says {}", row.s[col])),
                );
            }
            if let Some(tt) = row.t {
                if t != tt[col] {
                    return Check::new(
                        "extension-sets",
                        checked,
                        Some(format!("T({g}) = {t}, table says {}", tt[col])),
                    );
                }
            }
        }
    }
    Check::new("extension-sets", checked, None)
}

/// Run the whole root-system suite, timing each check.
pub fn suite(view: &RootSystemView) -> Vec<(Check, Duration)> {
    let ty = view.ty;
    let jobs: Vec<Box<dyn Fn() -> Check>> = vec![
        Box::new(|| table_oracle(view)),
        Box::new(|| extension_table(&ty)),
        Box::new(|| partition(view)),
        Box::new(|| re_re(view)),
        Box::new(|| ns_plus_re(view)),
        Box::new(|| imp(&ty)),
        Box::new(|| period(&ty)),
        Box::new(|| reflection_closure(view)),
        Box::new(|| even_cover(view)),
        Box::new(|| ns_decomposition(&ty)),
    ];
    jobs.iter()
        .map(|job| {
            let t = Instant::now();
            let c = job();
            (c, t.elapsed())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{enumerate, Window};

    #[test]
    fn suite_passes_small() {
        for f in Family::ALL {
            for (k, l) in [(1, 1), (2, 1), (1, 2)] {
                let Ok(ty) = AlgebraType::new(f, k, l) else {
                    continue;
                };
                let view = enumerate(&ty, Window::new(4));
                for (c, _) in suite(&view) {
                    assert!(c.passed(), "{ty}: {} failed: {:?}", c.name, c.witness);
                }
            }
        }
    }

    #[test]
    fn oracle_catches_dropped_root() {
        let ty = AlgebraType::new(Family::AEvenOdd, 1, 1).unwrap();
        let mut view = enumerate(&ty, Window::new(4));
        let victim = RootVec::new(3, vec![2], vec![0]);
        view.entries.retain(|e| e.root != victim);
        let c = table_oracle(&view);
        assert!(!c.passed());
        assert!(c.witness.unwrap().contains("2ε1+3δ"));
    }
}
