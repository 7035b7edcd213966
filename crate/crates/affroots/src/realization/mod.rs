//! Finite matrix models `sl(p|q)`, `psl(p|p)` and `osp(2k+2|2l)` with
//! their twisting automorphisms, the σ-eigenspace decomposition, and the
//! weights of the loop algebra read off from it.
//!
//! The loop algebra itself is never built: an eigenvector with
//! eigenvalue `ζ^k` contributes its Cartan weight at every δ-level
//! `≡ k (mod n)`.

mod gq;
mod linalg;
mod matrix;
mod nilpot;

pub use gq::Gq;
pub use matrix::{diamond, super_bracket, GradedMatrix, Grading, Mat};
pub use nilpot::{
    b_coefficients, eval_r_m, osp12_in, r_m_adjoint, verify_nilpot_identity, NilpotReport, Osp12,
    RmCheck,
};

use crate::error::{Error, Result};
use crate::lattice::{RootClass, RootVec};
use crate::par;
use crate::rootsys::{class_of, contains, enumerate, parity, AlgebraType, Family, Parity, Window};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;
use std::time::Instant;

/// Default bound on `k + l` for building a model.
pub const DEFAULT_CAP: usize = 4;

#[derive(Debug, Clone)]
pub struct Model {
    pub ty: AlgebraType,
    pub p: usize,
    pub q: usize,
    /// Order of σ.
    pub n: i64,
    /// Cartan weight of each diagonal index, restricted to the fixed part.
    index_weights: Vec<RootVec>,
}

impl Model {
    pub fn new(ty: &AlgebraType) -> Result<Self> {
        Model::with_cap(ty, DEFAULT_CAP)
    }

    pub fn with_cap(ty: &AlgebraType, cap: usize) -> Result<Self> {
        let (k, l) = (ty.k, ty.l);
        if k + l > cap {
            return Err(Error::SizeCap(k + l, cap));
        }
        let (p, q) = match ty.family {
            Family::AEvenOdd => (2 * k + 1, 2 * l),
            Family::AOddOdd => (2 * k, 2 * l),
            Family::AEvenEven => (2 * k + 1, 2 * l + 1),
            Family::D => (2 * k + 2, 2 * l),
        };
        let mut w = vec![];
        if ty.family == Family::D {
            for a in 0..p {
                let i = a % (k + 1);
                let sign = if a <= k { 1 } else { -1 };
                w.push(if i < k { ty.eps(i, sign) } else { ty.zero() });
            }
            for r in 0..q {
                w.push(ty.del(r % l, if r < l { 1 } else { -1 }));
            }
        } else {
            let mirror = |a: usize, size: usize, half: usize| -> (usize, i64) {
                if a < half {
                    (a, 1)
                } else if a >= size - half {
                    (size - 1 - a, -1)
                } else {
                    (0, 0)
                }
            };
            for a in 0..p {
                let (i, s) = mirror(a, p, k);
                w.push(if s == 0 { ty.zero() } else { ty.eps(i, s) });
            }
            for r in 0..q {
                let (j, s) = mirror(r, q, l);
                w.push(if s == 0 { ty.zero() } else { ty.del(j, s) });
            }
        }
        Ok(Model {
            ty: *ty,
            p,
            q,
            n: ty.family.twist(),
            index_weights: w,
        })
    }

    pub fn size(&self) -> usize {
        self.p + self.q
    }

    /// `A(m,n)` with `m = n` is the quotient `psl`.
    pub fn is_psl(&self) -> bool {
        self.ty.family != Family::D && self.p == self.q
    }

    pub fn name(&self) -> String {
        match (self.ty.family, self.is_psl()) {
            (Family::D, _) => format!("osp({}|{})", self.p, self.q),
            (_, true) => format!("psl({}|{})", self.p, self.q),
            _ => format!("sl({}|{})", self.p, self.q),
        }
    }

    pub fn dim(&self) -> usize {
        let n = self.size();
        match self.ty.family {
            Family::D => {
                let (m, l) = (self.p, self.q / 2);
                m * (m - 1) / 2 + l * (2 * l + 1) + m * self.q
            }
            _ if self.is_psl() => n * n - 2,
            _ => n * n - 1,
        }
    }

    pub fn zeta_pow(&self, k: i64) -> Gq {
        Gq::i_pow(k * 4 / self.n)
    }

    /// Partner entry and sign of the orthosymplectic constraint
    /// `X[r][c] = sign · X[r'][c']`.
    fn osp_partner(&self, r: usize, c: usize) -> (usize, usize, i64) {
        let (m, h, l) = (self.p, self.p / 2, self.q / 2);
        let obar = |i: usize| if i < h { i + h } else { i - h };
        let sbar = |i: usize| if i < l { i + l } else { i - l };
        let sj = |i: usize| if i < l { 1 } else { -1 };
        match (r < m, c < m) {
            (true, true) => (obar(c), obar(r), -1),
            (false, false) => {
                let (a, b) = (r - m, c - m);
                (m + sbar(b), m + sbar(a), -sj(a) * sj(b))
            }
            (false, true) => {
                let s = r - m;
                (obar(c), m + sbar(s), if s < l { -1 } else { 1 })
            }
            (true, false) => {
                let s = c - m;
                (m + sbar(s), obar(r), if s < l { 1 } else { -1 })
            }
        }
    }

    /// An idempotent linear map from `gl(p|q)` onto the model algebra
    /// that preserves weight spaces.
    pub fn project(&self, x: &GradedMatrix) -> GradedMatrix {
        let n = self.size();
        match self.ty.family {
            Family::D => {
                let half = Gq::ratio(1, 2);
                let mut out = GradedMatrix::zeros(self.p, self.q);
                for r in 0..n {
                    for c in 0..n {
                        let (r2, c2, s) = self.osp_partner(r, c);
                        let v = x.at(r, c) + &(&Gq::int(s) * x.at(r2, c2));
                        out.set(r, c, &half * &v);
                    }
                }
                out
            }
            _ => {
                let st = x.supertrace();
                if st.is_zero() {
                    return x.clone();
                }
                if self.is_psl() {
                    let mut out = x.clone();
                    out.set(0, 0, x.at(0, 0) - &st);
                    out
                } else {
                    let c = &st / &Gq::int(self.p as i64 - self.q as i64);
                    x.sub(&GradedMatrix::identity(self.p, self.q).scale(&c))
                }
            }
        }
    }

    pub fn contains(&self, x: &GradedMatrix) -> bool {
        (x.p, x.q) == (self.p, self.q) && &self.project(x) == x
    }

    fn sigma_unchecked(&self, x: &GradedMatrix) -> GradedMatrix {
        let (k, l) = (self.ty.k, self.ty.l);
        let (va, vb, vc, vd) = match self.ty.family {
            Family::D => {
                let k = self.ty.k;
                let swap = |i: usize| {
                    if i == k {
                        2 * k + 1
                    } else if i == 2 * k + 1 {
                        k
                    } else {
                        i
                    }
                };
                let n = self.size();
                let mut out = GradedMatrix::zeros(self.p, self.q);
                for r in 0..n {
                    for c in 0..n {
                        out.set(r, c, x.at(swap(r), swap(c)).clone());
                    }
                }
                return out;
            }
            Family::AEvenEven => (1, 2, 3, 4),
            Family::AEvenOdd => (1, 1, 1, 1),
            Family::AOddOdd => (7, 6, 5, 1),
        };
        let (a, b, c, d) = x.blocks();
        let dm = |m: &Mat, v: u8| diamond(m, v, k, l).expect("block shapes fixed by the model");
        GradedMatrix::from_blocks(
            &dm(&a, va).neg(),
            &dm(&c, vc),
            &dm(&b, vb).neg(),
            &dm(&d, vd).neg(),
        )
    }

    /// The twisting automorphism.
    pub fn sigma(&self, x: &GradedMatrix) -> Result<GradedMatrix> {
        if !self.contains(x) {
            return Err(Error::NotInModel);
        }
        Ok(self.sigma_unchecked(x))
    }

    pub fn index_weight(&self, a: usize) -> &RootVec {
        &self.index_weights[a]
    }

    /// Weight of `e_{ab}` on the fixed Cartan.
    pub fn unit_weight(&self, a: usize, b: usize) -> RootVec {
        &self.index_weights[a] - &self.index_weights[b]
    }

    /// Basis `h_1..h_k, d_1..d_l` of the σ-fixed Cartan, dual to `ε_i, δ_j`.
    pub fn cartan(&self) -> Vec<GradedMatrix> {
        let (k, l, p, q) = (self.ty.k, self.ty.l, self.p, self.q);
        let diag = |a: usize, b: usize| {
            GradedMatrix::unit(p, q, a, a).sub(&GradedMatrix::unit(p, q, b, b))
        };
        let mut out = vec![];
        for i in 0..k {
            let mirror = if self.ty.family == Family::D {
                i + k + 1
            } else {
                p - 1 - i
            };
            out.push(diag(i, mirror));
        }
        for j in 0..l {
            let mirror = if self.ty.family == Family::D {
                p + j + l
            } else {
                p + q - 1 - j
            };
            out.push(diag(p + j, mirror));
        }
        out
    }

    /// `λ(h)` for `h` in the fixed Cartan.
    pub fn pair(&self, lam: &RootVec, h: &GradedMatrix) -> Gq {
        let mut acc = Gq::zero();
        for (i, c) in lam.e.iter().enumerate() {
            acc += &(&Gq::int(*c) * h.at(i, i));
        }
        for (j, c) in lam.f.iter().enumerate() {
            acc += &(&Gq::int(*c) * h.at(self.p + j, self.p + j));
        }
        acc
    }

    /// A random element of the given parity with small integer seeds.
    pub fn random_element(&self, rng: &mut impl Rng, odd: bool) -> GradedMatrix {
        let n = self.size();
        let mut x = GradedMatrix::zeros(self.p, self.q);
        for r in 0..n {
            for c in 0..n {
                if ((r < self.p) != (c < self.p)) == odd {
                    x.set(r, c, Gq::int(rng.gen_range(-3..=3)));
                }
            }
        }
        self.project(&x)
    }
}

pub fn sigma(ty: &AlgebraType, x: &GradedMatrix) -> Result<GradedMatrix> {
    Model::new(ty)?.sigma(x)
}

/// Matrix units `(row, col)` of one weight and parity.
type Units = Vec<(usize, usize)>;

/// One joint eigenspace: fixed Cartan weight, parity, σ-eigenvalue `ζ^k`.
#[derive(Debug, Clone)]
pub struct WeightSpace {
    pub weight: RootVec,
    pub odd: bool,
    pub k: i64,
    pub basis: Vec<GradedMatrix>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EigenComponent {
    pub k_mod_n: i64,
    pub parity: Grading,
    pub dim: usize,
    #[serde(skip)]
    pub basis: Vec<GradedMatrix>,
    /// Weights with `d = k`, and multiplicities.
    pub weights: Vec<(RootVec, usize)>,
}

#[derive(Debug, Clone)]
pub struct Decomposition {
    pub model: Model,
    pub spaces: Vec<WeightSpace>,
}

impl Decomposition {
    pub fn new(model: Model) -> Result<Self> {
        let n = model.size();
        let (p, q) = (model.p, model.q);
        let mut groups: BTreeMap<(RootVec, bool), Units> = BTreeMap::new();
        for a in 0..n {
            for b in 0..n {
                let odd = (a < p) != (b < p);
                groups
                    .entry((model.unit_weight(a, b), odd))
                    .or_default()
                    .push((a, b));
            }
        }
        let groups: Vec<((RootVec, bool), Units)> = groups.into_iter().collect();
        let spaces = par::flat_map(&groups, |((w, odd), units)| {
            let vecs: Vec<Vec<Gq>> = units
                .iter()
                .map(|&(a, b)| model.project(&GradedMatrix::unit(p, q, a, b)).data)
                .collect();
            let (basis, piv) = linalg::rref(&vecs);
            let dim = basis.len();
            if dim == 0 {
                return vec![];
            }
            // σ in this basis, row i = coordinate i of the images
            let images: Vec<Vec<Gq>> = basis
                .iter()
                .map(|b| {
                    let m = GradedMatrix {
                        p,
                        q,
                        data: b.clone(),
                    };
                    linalg::coords(&basis, &piv, &model.sigma_unchecked(&m).data)
                        .expect("σ preserves weight spaces")
                })
                .collect();
            let quotient = model.is_psl() && w.is_zero() && !odd;
            (0..model.n)
                .map(|k| {
                    let z = model.zeta_pow(k);
                    let rows: Vec<Vec<Gq>> = (0..dim)
                        .map(|i| {
                            (0..dim)
                                .map(|j| {
                                    if i == j {
                                        &images[j][i] - &z
                                    } else {
                                        images[j][i].clone()
                                    }
                                })
                                .collect()
                        })
                        .collect();
                    let mut vs: Vec<GradedMatrix> = linalg::kernel(&rows, dim)
                        .into_iter()
                        .map(|c| {
                            let mut m = GradedMatrix::zeros(p, q);
                            for (cj, bj) in c.iter().zip(&basis) {
                                if !cj.is_zero() {
                                    m = m.add(
                                        &GradedMatrix {
                                            p,
                                            q,
                                            data: bj.clone(),
                                        }
                                        .scale(cj),
                                    );
                                }
                            }
                            m
                        })
                        .collect();
                    if quotient && k == model.n / 2 {
                        vs = drop_identity(vs, p, q);
                    }
                    WeightSpace {
                        weight: w.clone(),
                        odd: *odd,
                        k,
                        basis: vs,
                    }
                })
                .filter(|s| !s.basis.is_empty())
                .collect()
        });
        let total: usize = spaces.iter().map(|s| s.basis.len()).sum();
        if total != model.dim() {
            return Err(Error::Shape(format!(
                "eigenspaces span {total} of {}",
                model.dim()
            )));
        }
        Ok(Decomposition { model, spaces })
    }

    pub fn find(&self, weight: &RootVec, odd: bool, k: i64) -> Option<&WeightSpace> {
        let k = k.rem_euclid(self.model.n);
        self.spaces
            .iter()
            .find(|s| &s.weight == weight && s.odd == odd && s.k == k)
    }

    pub fn components(&self) -> Vec<EigenComponent> {
        let mut out = vec![];
        for k in 0..self.model.n {
            for odd in [false, true] {
                let mine: Vec<&WeightSpace> = self
                    .spaces
                    .iter()
                    .filter(|s| s.k == k && s.odd == odd)
                    .collect();
                if mine.is_empty() {
                    continue;
                }
                out.push(EigenComponent {
                    k_mod_n: k,
                    parity: if odd { Grading::Odd } else { Grading::Even },
                    dim: mine.iter().map(|s| s.basis.len()).sum(),
                    basis: mine.iter().flat_map(|s| s.basis.iter().cloned()).collect(),
                    weights: mine
                        .iter()
                        .map(|s| (s.weight.at_level(k), s.basis.len()))
                        .collect(),
                });
            }
        }
        out
    }
}

/// Reduce a family containing the identity to a basis modulo it.
fn drop_identity(vs: Vec<GradedMatrix>, p: usize, q: usize) -> Vec<GradedMatrix> {
    let last = p + q - 1;
    let id = GradedMatrix::identity(p, q);
    let shifted: Vec<Vec<Gq>> = vs
        .iter()
        .map(|v| v.sub(&id.scale(v.at(last, last))).data)
        .collect();
    linalg::rref(&shifted)
        .0
        .into_iter()
        .map(|data| GradedMatrix { p, q, data })
        .collect()
}

pub fn eigen_decompose(ty: &AlgebraType) -> Result<Vec<EigenComponent>> {
    Ok(Decomposition::new(Model::new(ty)?)?.components())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CartanWeight {
    pub root: RootVec,
    pub parity: Grading,
    pub multiplicity: usize,
}

/// Weights of the loop algebra with `|d| ≤ N`, from the decomposition.
pub fn weights_of(dec: &Decomposition, w: Window) -> Vec<CartanWeight> {
    let n = dec.model.n;
    let mut acc: BTreeMap<(RootVec, bool), usize> = BTreeMap::new();
    for s in &dec.spaces {
        let first = -w.n + (s.k + w.n).rem_euclid(n);
        for d in (first..=w.n).step_by(n as usize) {
            *acc.entry((s.weight.at_level(d), s.odd)).or_default() += s.basis.len();
        }
    }
    acc.into_iter()
        .map(|((root, odd), multiplicity)| CartanWeight {
            root,
            parity: if odd { Grading::Odd } else { Grading::Even },
            multiplicity,
        })
        .collect()
}

pub fn cartan_weights(ty: &AlgebraType, w: Window) -> Result<Vec<CartanWeight>> {
    Ok(weights_of(&Decomposition::new(Model::new(ty)?)?, w))
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct WeightComparison {
    pub compared: usize,
    pub missing: Vec<RootVec>,
    pub extra: Vec<RootVec>,
    /// Non-imaginary weights with multiplicity other than one.
    pub multiplicity: Vec<(RootVec, usize)>,
    pub parity: Vec<RootVec>,
    /// `(d, even, odd)` multiplicities on `ℤδ`, informational.
    pub imaginary: Vec<(i64, usize, usize)>,
}

impl WeightComparison {
    pub fn passed(&self) -> bool {
        self.missing.is_empty()
            && self.extra.is_empty()
            && self.multiplicity.is_empty()
            && self.parity.is_empty()
    }
}

/// Nonzero weights against the enumerated root system.
pub fn compare_weights(ty: &AlgebraType, weights: &[CartanWeight], w: Window) -> WeightComparison {
    let mut out = WeightComparison::default();
    let mut mult: BTreeMap<RootVec, (usize, usize)> = BTreeMap::new();
    for cw in weights {
        let e = mult.entry(cw.root.clone()).or_default();
        if cw.parity == Grading::Odd {
            e.1 += cw.multiplicity;
        } else {
            e.0 += cw.multiplicity;
        }
    }
    mult.remove(&ty.zero());
    let view = enumerate(ty, w);
    for x in view.roots().filter(|x| !x.is_zero()) {
        if !mult.contains_key(x) {
            out.missing.push(x.clone());
        }
    }
    for (x, &(ev, od)) in &mult {
        out.compared += 1;
        if !contains(ty, x) {
            out.extra.push(x.clone());
            continue;
        }
        if x.is_in_z_delta() {
            out.imaginary.push((x.d, ev, od));
            continue;
        }
        if ev + od != 1 {
            out.multiplicity.push((x.clone(), ev + od));
        }
        let want = parity(ty, x).ok();
        let got = if od > 0 { Parity::Odd } else { Parity::Even };
        if want != Some(got) {
            out.parity.push(x.clone());
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct ModelCheck {
    pub name: String,
    pub checked: usize,
    pub witness: Option<String>,
    pub millis: f64,
}

impl ModelCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

fn timed(name: &str, f: impl FnOnce() -> (usize, Option<String>)) -> ModelCheck {
    let t = Instant::now();
    let (checked, witness) = f();
    ModelCheck {
        name: name.to_string(),
        checked,
        witness,
        millis: t.elapsed().as_secs_f64() * 1e3,
    }
}

/// Smallest `o ≤ 8` with `σ^o` fixing every element of `basis`.
pub fn order_on(model: &Model, basis: &[GradedMatrix]) -> Option<usize> {
    let mut cur: Vec<GradedMatrix> = basis.to_vec();
    for o in 1..=8 {
        cur = cur.iter().map(|x| model.sigma_unchecked(x)).collect();
        if cur.iter().zip(basis).all(|(a, b)| a == b) {
            return Some(o);
        }
    }
    None
}

/// Projected units: a spanning set of the model.
pub fn spanning_set(model: &Model) -> Vec<GradedMatrix> {
    let n = model.size();
    let mut out = vec![];
    for a in 0..n {
        for b in 0..n {
            let x = model.project(&GradedMatrix::unit(model.p, model.q, a, b));
            if !x.is_zero() {
                out.push(x);
            }
        }
    }
    out
}

/// `σ([X,Y]) = [σX, σY]` and `σX ∈ 𝔤` on random homogeneous pairs.
pub fn verify_automorphism(ty: &AlgebraType, trials: usize, seed: u64) -> Result<ModelCheck> {
    let model = Model::new(ty)?;
    Ok(automorphism_check(&model, trials, seed))
}

fn automorphism_check(model: &Model, trials: usize, seed: u64) -> ModelCheck {
    timed("bracket-automorphism", || {
        let seeds: Vec<u64> = (0..trials as u64).collect();
        let bad: Vec<String> = par::flat_map(&seeds, |t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(1_000_003).wrapping_add(*t));
            let (ox, oy) = (rng.gen_bool(0.5), rng.gen_bool(0.5));
            let x = model.random_element(&mut rng, ox);
            let y = model.random_element(&mut rng, oy);
            let (sx, sy) = (model.sigma_unchecked(&x), model.sigma_unchecked(&y));
            if !model.contains(&sx) {
                return vec![format!("trial {t}: σ(X) leaves the model")];
            }
            let lhs = model.sigma_unchecked(&super_bracket(&x, &y).unwrap());
            let rhs = super_bracket(&sx, &sy).unwrap();
            if lhs != rhs {
                vec![format!("trial {t}: σ[X,Y] ≠ [σX,σY]")]
            } else {
                vec![]
            }
        });
        (trials, bad.into_iter().next())
    })
}

/// Everything the model can check about itself, plus the comparison with
/// the enumerated roots on `w`.
#[derive(Debug, Clone, Serialize)]
pub struct RealizationReport {
    pub algebra: String,
    pub model: String,
    pub dim: usize,
    pub order: Option<usize>,
    pub expected_order: usize,
    pub checks: Vec<ModelCheck>,
    pub weights: WeightComparison,
    pub components: Vec<EigenComponent>,
    pub passed: bool,
}

pub fn realize(
    ty: &AlgebraType,
    w: Window,
    trials: usize,
    seed: u64,
    cap: usize,
) -> Result<RealizationReport> {
    let model = Model::with_cap(ty, cap)?;
    let mut checks = vec![];
    let span = spanning_set(&model);
    let mut order = None;
    checks.push(timed("order", || {
        order = order_on(&model, &span);
        let want = model.n as usize;
        let witness = match order {
            Some(o) if o == want => None,
            o => Some(format!("order {o:?}, expected {want}")),
        };
        (span.len(), witness)
    }));
    checks.push(automorphism_check(&model, trials, seed));
    let cartan = model.cartan();
    checks.push(timed("cartan-fixed", || {
        let bad = cartan
            .iter()
            .position(|h| &model.sigma_unchecked(h) != h || !model.contains(h));
        (
            cartan.len(),
            bad.map(|i| format!("Cartan element {i} is not fixed")),
        )
    }));
    let t0 = Instant::now();
    let dec = Decomposition::new(model.clone())?;
    checks.push(ModelCheck {
        name: "eigen-decomposition".into(),
        checked: dec.spaces.len(),
        witness: None,
        millis: t0.elapsed().as_secs_f64() * 1e3,
    });
    checks.push(timed("eigenvectors", || {
        let mut n = 0;
        for s in &dec.spaces {
            let z = model.zeta_pow(s.k);
            for x in &s.basis {
                n += 1;
                let sx = model.sigma_unchecked(x);
                let diff = sx.sub(&x.scale(&z));
                let ok = diff.is_zero() || (model.is_psl() && is_scalar(&diff));
                if !ok {
                    return (
                        n,
                        Some(format!("σ(x) ≠ ζ^{} x at weight {}", s.k, s.weight)),
                    );
                }
                for h in &cartan {
                    let lhs = super_bracket(h, x).unwrap();
                    if lhs != x.scale(&model.pair(&s.weight, h)) {
                        return (n, Some(format!("[h,x] ≠ λ(h)x at weight {}", s.weight)));
                    }
                }
            }
        }
        (n, None)
    }));
    checks.push(timed("grading", || grading_check(&dec, trials, seed)));
    if ty.family != Family::D {
        checks.push(timed("trace", || trace_check(&model, seed)));
    }
    let weights = compare_weights(ty, &weights_of(&dec, w), w);
    checks.push(ModelCheck {
        name: "weights-vs-enumerate".into(),
        checked: weights.compared,
        witness: (!weights.passed()).then(|| {
            format!(
                "missing {:?} extra {:?} multiplicity {:?} parity {:?}",
                weights.missing.first().map(|x| x.to_string()),
                weights.extra.first().map(|x| x.to_string()),
                weights
                    .multiplicity
                    .first()
                    .map(|(x, m)| format!("{x}:{m}")),
                weights.parity.first().map(|x| x.to_string())
            )
        }),
        millis: 0.0,
    });
    let passed = checks.iter().all(ModelCheck::passed);
    Ok(RealizationReport {
        algebra: ty.to_string(),
        model: model.name(),
        dim: model.dim(),
        order,
        expected_order: model.n as usize,
        checks,
        weights,
        components: dec.components(),
        passed,
    })
}

fn is_scalar(x: &GradedMatrix) -> bool {
    let c = x.at(0, 0);
    x == &GradedMatrix::identity(x.p, x.q).scale(c)
}

/// `[^{[k]}𝔤, ^{[k']}𝔤] ⊆ ^{[k+k']}𝔤` on sampled basis pairs.
fn grading_check(dec: &Decomposition, trials: usize, seed: u64) -> (usize, Option<String>) {
    let model = &dec.model;
    let all: Vec<(i64, &GradedMatrix)> = dec
        .spaces
        .iter()
        .flat_map(|s| s.basis.iter().map(move |b| (s.k, b)))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37);
    for t in 0..trials {
        let (k1, x) = all[rng.gen_range(0..all.len())];
        let (k2, y) = all[rng.gen_range(0..all.len())];
        let b = super_bracket(x, y).unwrap();
        let diff = model
            .sigma_unchecked(&b)
            .sub(&b.scale(&model.zeta_pow(k1 + k2)));
        if !(diff.is_zero() || (model.is_psl() && is_scalar(&diff))) {
            return (
                t + 1,
                Some(format!(
                    "bracket of classes {k1} and {k2} leaves class {}",
                    (k1 + k2) % model.n
                )),
            );
        }
    }
    (trials, None)
}

/// `tr(A^♦1) = tr(A^♦4) = tr(A)` and `σ` keeps the supertrace zero.
fn trace_check(model: &Model, seed: u64) -> (usize, Option<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7ace);
    let (k, l) = (model.ty.k, model.ty.l);
    for t in 0..20 {
        let x = model.random_element(&mut rng, false);
        let (a, _, _, d) = x.blocks();
        if diamond(&a, 1, k, l).unwrap().trace() != a.trace() {
            return (t, Some("tr(A^♦1) ≠ tr(A)".into()));
        }
        if d.rows == 2 * l + 1 && diamond(&d, 4, k, l).unwrap().trace() != d.trace() {
            return (t, Some("tr(D^♦4) ≠ tr(D)".into()));
        }
        if !model.sigma_unchecked(&x).supertrace().is_zero() {
            return (t, Some("str σ(X) ≠ 0".into()));
        }
    }
    (20, None)
}

#[derive(Debug, Clone)]
pub struct Sl2Triple {
    pub e: GradedMatrix,
    pub f: GradedMatrix,
    pub h: GradedMatrix,
}

/// `(e, f, h)` for a real even root `α` at the given level, inside the
/// eigencomponents; `α(h) = 2`.
pub fn sl2_triple(dec: &Decomposition, alpha: &RootVec) -> Result<Sl2Triple> {
    let ty = &dec.model.ty;
    if !contains(ty, alpha) {
        return Err(Error::NotARoot(alpha.clone()));
    }
    if class_of(alpha) != RootClass::Real || parity(ty, alpha)? != Parity::Even {
        return Err(Error::NotReal(alpha.clone()));
    }
    let g = alpha.gradient();
    let xs = dec
        .find(&g, false, alpha.d)
        .ok_or_else(|| Error::NoSuchRoot(alpha.clone()))?;
    let ys = dec
        .find(&-&g, false, -alpha.d)
        .ok_or_else(|| Error::NoSuchRoot(-alpha))?;
    let (x, y) = (&xs.basis[0], &ys.basis[0]);
    let h = super_bracket(x, y)?;
    let c = dec.model.pair(&g, &h);
    if c.is_zero() {
        return Err(Error::NoSuchRoot(alpha.clone()));
    }
    let f = y.scale(&(&Gq::int(2) / &c));
    let h = super_bracket(x, &f)?;
    Ok(Sl2Triple { e: x.clone(), f, h })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn types() -> Vec<AlgebraType> {
        let mut v = vec![];
        for f in Family::ALL {
            for (k, l) in [(1, 1), (2, 1), (1, 2)] {
                if let Ok(t) = AlgebraType::new(f, k, l) {
                    v.push(t);
                }
            }
        }
        v
    }

    #[test]
    fn osp_projection_is_membership() {
        let t = AlgebraType::new(Family::D, 1, 1).unwrap();
        let m = Model::new(&t).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let (ox, oy) = (rng.gen_bool(0.5), rng.gen_bool(0.5));
            let x = m.random_element(&mut rng, ox);
            let y = m.random_element(&mut rng, oy);
            assert!(m.contains(&x));
            assert!(m.contains(&super_bracket(&x, &y).unwrap()));
        }
        assert!(spanning_set(&m).len() >= m.dim());
        assert!(!m.contains(&GradedMatrix::unit(m.p, m.q, 0, 0)));
    }

    #[test]
    fn every_model_realizes() {
        for t in types() {
            let r = realize(&t, Window::new(8), 30, 0, DEFAULT_CAP).unwrap();
            for c in &r.checks {
                assert!(c.passed(), "{t}: {} {:?}", c.name, c.witness);
            }
            assert_eq!(r.order, Some(t.family.twist() as usize));
        }
    }

    #[test]
    fn size_cap_refuses() {
        let t = AlgebraType::new(Family::D, 5, 5).unwrap();
        assert!(matches!(Model::new(&t), Err(Error::SizeCap(10, 4))));
    }

    #[test]
    fn sl2_in_a_family() {
        let t = AlgebraType::new(Family::AEvenOdd, 2, 1).unwrap();
        let dec = Decomposition::new(Model::new(&t).unwrap()).unwrap();
        let alpha = RootVec::new(0, vec![1, -1], vec![0]);
        let s = sl2_triple(&dec, &alpha).unwrap();
        assert_eq!(super_bracket(&s.e, &s.f).unwrap(), s.h);
        assert_eq!(super_bracket(&s.h, &s.e).unwrap(), s.e.scale(&Gq::int(2)));
        assert_eq!(super_bracket(&s.h, &s.f).unwrap(), s.f.scale(&Gq::int(-2)));
        assert_eq!(dec.model.pair(&alpha, &s.h), Gq::int(2));
        assert!(sl2_triple(&dec, &RootVec::new(0, vec![1, 0], vec![1])).is_err());
    }

    #[test]
    fn d_second_subsystem_at_even_levels() {
        let t = AlgebraType::new(Family::D, 1, 2).unwrap();
        for cw in cartan_weights(&t, Window::new(4)).unwrap() {
            let x = &cw.root;
            if x.e.iter().all(|c| *c == 0)
                && x.f.iter().any(|c| *c != 0)
                && cw.parity == Grading::Even
            {
                assert_eq!(x.d.rem_euclid(2), 0, "{x}");
            }
        }
    }
}
