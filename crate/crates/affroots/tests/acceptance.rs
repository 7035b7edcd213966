//! The eight acceptance criteria. Runs as a plain binary so every line
//! prints: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

use affroots::realization::{
    eval_r_m, osp12_in, r_m_adjoint, realize, verify_nilpot_identity, Decomposition, Model,
    DEFAULT_CAP,
};
use affroots::rootsys::checks::{
    extension_table, imp, ns_plus_re, period, re_re, reflection_closure, table_oracle,
};
use affroots::rootsys::enumerate;
use affroots::shadow::{
    build_parabolic, build_zeta, check_axioms, extremal_set, extremal_weight, inject_case4,
    inject_close_violation, oracle_extremal_set, random_model, synth_labeling, verify_zeta, Axiom,
    SynthKind,
};
use affroots::{AlgebraType, Family, Window, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const GRID: [(usize, usize); 4] = [(1, 1), (2, 1), (1, 2), (2, 2)];

fn grid() -> Vec<AlgebraType> {
    Family::ALL
        .iter()
        .flat_map(|&f| {
            GRID.iter()
                .filter_map(move |&(k, l)| AlgebraType::new(f, k, l).ok())
        })
        .collect()
}

/// Smallest rank of each family; `(1,1)` except where it is excluded.
fn smallest() -> Vec<AlgebraType> {
    Family::ALL
        .iter()
        .map(|&f| {
            AlgebraType::new(f, 1, 1)
                .or_else(|_| AlgebraType::new(f, 2, 1))
                .unwrap()
        })
        .collect()
}

fn table_oracles() -> Outcome {
    let mut slowest = Duration::ZERO;
    for ty in grid() {
        let t = Instant::now();
        let c = table_oracle(&enumerate(&ty, Window::new(8)));
        let dt = t.elapsed();
        slowest = slowest.max(dt);
        if let Some(w) = c.witness {
            return Err(format!("{ty}: {w}"));
        }
        if dt >= Duration::from_secs(1) {
            return Err(format!("{ty}: {dt:?}"));
        }
    }
    Ok(format!("{} cases, slowest {slowest:?}", grid().len()))
}

fn extension_cells() -> Outcome {
    let mut cells = 0;
    for ty in grid() {
        let c = extension_table(&ty);
        cells += c.checked;
        if let Some(w) = c.witness {
            return Err(format!("{ty}: {w}"));
        }
    }
    Ok(format!("{cells} cells"))
}

fn structure() -> Outcome {
    let mut checked = 0;
    for ty in grid() {
        let view = enumerate(&ty, Window::new(8));
        for c in [
            re_re(&view),
            ns_plus_re(&view),
            imp(&ty),
            period(&ty),
            reflection_closure(&view),
        ] {
            checked += c.checked;
            if let Some(w) = c.witness {
                return Err(format!("{ty} {}: {w}", c.name));
            }
        }
    }
    Ok(format!("{checked} cases, 0 violations"))
}

fn realizations() -> Outcome {
    let t = Instant::now();
    let mut types = smallest();
    types.push(AlgebraType::new(Family::AEvenOdd, 2, 1).unwrap());
    let mut orders = vec![];
    for ty in &types {
        let r =
            realize(ty, Window::new(8), 200, 0, DEFAULT_CAP).map_err(|e| format!("{ty}: {e}"))?;
        if let Some(c) = r.checks.iter().find(|c| !c.passed()) {
            return Err(format!(
                "{ty} {}: {}",
                c.name,
                c.witness.clone().unwrap_or_default()
            ));
        }
        if !r.weights.passed() {
            return Err(format!("{ty}: weights {:?}", r.weights));
        }
        if r.order != Some(r.expected_order) {
            return Err(format!("{ty}: order {:?}", r.order));
        }
        orders.push(format!("{}={}", r.model, r.expected_order));
    }
    let dt = t.elapsed();
    if dt >= Duration::from_secs(60) {
        return Err(format!("took {dt:?}"));
    }
    Ok(format!("{} in {dt:.2?}", orders.join(" ")))
}

fn shadows() -> Outcome {
    let w = Window::new(4);
    let kinds = [SynthKind::AllUp, SynthKind::AllDown, SynthKind::MixedTight];
    let mut passed = BTreeMap::new();
    for ty in smallest() {
        for kind in kinds {
            for seed in 0..100 {
                let l = synth_labeling(&ty, seed, kind);
                let rep = check_axioms(&l, w);
                if let Some(v) = rep.violations.first() {
                    return Err(format!("{ty} {} seed {seed}: {v}", kind.cli_name()));
                }
                if let Some(x) = l.roundtrip_witness(w) {
                    return Err(format!("{ty} seed {seed}: round-trip {x}"));
                }
                *passed.entry(kind.cli_name()).or_insert(0) += 1;
            }
        }
        for seed in 0..5 {
            let l = synth_labeling(&ty, seed, SynthKind::AllUp);
            let (bad, _) = inject_case4(&l);
            if check_axioms(&bad, w)
                .first(Axiom::Case4)
                .is_none_or(|v| v.witness.is_empty())
            {
                return Err(format!("{ty} seed {seed}: Case-4 fault missed"));
            }
            let (bad, b1, b2) =
                inject_close_violation(&l, w).ok_or(format!("{ty}: nowhere to inject"))?;
            let rep = check_axioms(&bad, w);
            let hit = rep.violations.iter().any(|v| {
                v.axiom == Axiom::CloseSum && v.witness.contains(&b1) && v.witness.contains(&b2)
            });
            if !hit {
                return Err(format!("{ty} seed {seed}: close({b1}, {b2}) fault missed"));
            }
        }
    }
    let per: Vec<String> = passed.iter().map(|(k, n)| format!("{k} {n}")).collect();
    Ok(format!("{}; faults detected", per.join(", ")))
}

fn zetas() -> Outcome {
    let w = Window::new(6);
    let mut cases = [0usize; 4];
    for ty in smallest() {
        for kind in [SynthKind::AllUp, SynthKind::AllDown] {
            for seed in 0..25 {
                let l = synth_labeling(&ty, seed, kind);
                let z = build_zeta(&l).map_err(|e| format!("{ty} seed {seed}: {e}"))?;
                if z.up_zeta.z_d <= Q::from(0) {
                    return Err(format!("{ty} seed {seed}: up ζ(δ) ≤ 0"));
                }
                if let Some(c) = verify_zeta(&l, &z, w)
                    .into_iter()
                    .find(|c| c.witness.is_some())
                {
                    return Err(format!(
                        "{ty} seed {seed} {}: {}",
                        c.name,
                        c.witness.unwrap()
                    ));
                }
                for i in 1..=2 {
                    let p = build_parabolic(&l, i, w).map_err(|e| e.to_string())?;
                    if !p.passed() {
                        return Err(format!("{ty} seed {seed} P{i}: {:?}", p.witness));
                    }
                }
                cases[z.case.number() as usize - 1] += 1;
            }
        }
    }
    Ok(format!("cases 1-4: {cases:?}"))
}

fn nilpotents() -> Outcome {
    let ty = AlgebraType::new(Family::AEvenEven, 1, 1).unwrap();
    let model = Model::new(&ty).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut pairs = 0;
    while pairs < 50 {
        let ox = rng.gen_bool(0.5);
        let x = model.random_element(&mut rng, ox);
        let y = model.random_element(&mut rng, true);
        if y.is_zero() {
            continue;
        }
        let r = verify_nilpot_identity(&x, &y, 3).map_err(|e| e.to_string())?;
        if let Some(f) = r.failures.first() {
            return Err(format!("pair {pairs}: {f}"));
        }
        pairs += 1;
    }
    let nu = Q::from(4);
    if eval_r_m(1, nu) != nu || eval_r_m(2, nu) != Q::from(-8) {
        return Err(format!(
            "r_1, r_2 = {}, {}",
            eval_r_m(1, nu),
            eval_r_m(2, nu)
        ));
    }
    let dec = Decomposition::new(model).map_err(|e| e.to_string())?;
    let o = osp12_in(&dec).map_err(|e| e.to_string())?;
    for m in 1..=3 {
        let c = r_m_adjoint(&o, m);
        if !c.passed || c.nu_h != "4" {
            return Err(format!("r_{m}: {c:?}"));
        }
    }
    Ok(format!("{pairs} pairs, r_1..r_3 match at ν(h)=4"))
}

fn extremal() -> Outcome {
    let t = Instant::now();
    let mut largest = 0;
    for seed in 0..100 {
        let m = random_model(seed);
        largest = largest.max(m.len());
        let got = extremal_weight(&m).map_err(|e| format!("seed {seed}: {e}"))?;
        if !m.contains(&got) || !m.is_extremal(&got) {
            return Err(format!("seed {seed}: {got} is not extremal"));
        }
        let oracle = oracle_extremal_set(&m);
        if extremal_set(&m).map_err(|e| e.to_string())? != oracle
            || oracle.iter().min() != Some(&got)
        {
            return Err(format!("seed {seed}: disagrees with brute force"));
        }
    }
    let dt = t.elapsed();
    if dt >= Duration::from_secs(10) {
        return Err(format!("took {dt:?}"));
    }
    Ok(format!("100 models, |supp| ≤ {largest}, {dt:.2?}"))
}

fn main() {
    affroots::par::init_from_env();
    let criteria: [Criterion; 8] = [
        ("table-oracle", table_oracles),
        ("extension-sets", extension_cells),
        ("structural-identities", structure),
        ("realization", realizations),
        ("shadow-axioms", shadows),
        ("zeta", zetas),
        ("nilpotent-identities", nilpotents),
        ("extremal-weight", extremal),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = run();
        let dt = t.elapsed();
        match r {
            Ok(detail) => println!("PASS {} {name}: {detail} [{dt:.2?}]", n + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why} [{dt:.2?}]", n + 1)
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
