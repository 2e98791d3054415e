//! The verification suite: fourteen criteria covering fusion, braiding,
//! free Lie algebras and the contragredient construction, each evaluated
//! with exact arithmetic and reported as one PASS or FAIL line.
//!
//! Three criteria fail for mathematical reasons and are listed in
//! [`KNOWN_FAILURES`]:
//!
//! * 4: over sl(L_2), and over gl(L_2) with b̃ ≠ 0, the zero action is not
//!   compatible with a nonzero d, because d would have to land in the
//!   centre of the torus.
//! * 6: for 2 ≤ k ≤ p − 2 the algebra of the (1, 1) datum over 𝟙 does not
//!   stop in degree 2; already [[v, [v, w]], f] = 3ab·[v, w] ≠ 0.
//! * 13: several full-rank gl(L_2)-data give algebras that do not stabilize
//!   (periodic or exponentially growing pieces).

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use crate::contragredient::{
    check_datum, contragredient_compute, datum_from_cartan_matrix, datum_gl_chain, datum_over_gl2, datum_over_one,
    datum_over_sl2, derive_d, flie_quotient, q_grading, radical_quotient, scan_gl2, symmetrizable_over_one,
    ContragredientDatum, GradedContragredient, GradedForm, RowStatus, DEFAULT_ENGINE_BUDGET,
};
use crate::error::{Error, Result};
use crate::ff_linalg::{fp, Matrix};
use crate::free_lie::flie_piece;
use crate::lie_objects::{
    check_lie_axioms, check_module, dual_action, gl, semisimplify_lie, sl, InvariantForm, LieAlgebra,
    StructureConstants,
};
use crate::rep_alphap::swap_matrix;
use crate::verp::{format_mult, fusion_rule, fusion_upstairs, self_braiding_signs, Obj, VerMorphism, VerObject};

/// Criteria that fail for the reasons given in the module documentation.
pub const KNOWN_FAILURES: [usize; 3] = [4, 6, 13];

/// Result of one criterion.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl Outcome {
    /// "PASS  3 free Lie degree 2 (0.01s, limit 10s): …"
    pub fn line(&self) -> String {
        format!(
            "{} {:>2} {} ({:.2}s, limit {}s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs(),
            self.detail
        )
    }
}

/// Id, title and time limit of every criterion.
pub const CRITERIA: [(usize, &str, u64); 14] = [
    (1, "fusion rules", 5),
    (2, "braiding signs", 5),
    (3, "free Lie degree 2", 10),
    (4, "trivial action", 10),
    (5, "degenerate d", 5),
    (6, "rank one over the unit", 60),
    (7, "classical degenerations", 10),
    (8, "gl and sl as contragredient algebras", 30),
    (9, "form and kernel agreement", 60),
    (10, "semidirect decomposition", 30),
    (11, "mirror symmetry", 30),
    (12, "classical A2 oracle", 10),
    (13, "gl(L2) scan", 120),
    (14, "axiom regression", 60),
];

/// Runs one criterion.
pub fn run(id: usize) -> Result<Outcome> {
    let &(_, title, secs) =
        CRITERIA.iter().find(|c| c.0 == id).ok_or_else(|| Error::OutOfRange(format!("criterion {id}")))?;
    let start = Instant::now();
    let f: fn(&mut Tally) -> Result<()> = match id {
        1 => fusion_rules,
        2 => braiding_signs,
        3 => free_lie_degree_two,
        4 => trivial_action,
        5 => degenerate_d,
        6 => rank_one_over_unit,
        7 => classical_degenerations,
        8 => gl_and_sl,
        9 => form_agreement,
        10 => semidirect_decomposition,
        11 => mirror_symmetry,
        12 => classical_a2,
        13 => gl2_scan,
        _ => axiom_regression,
    };
    let mut tally = Tally::default();
    if let Err(e) = f(&mut tally) {
        tally.fail(format!("error: {e}"));
    }
    let elapsed = start.elapsed();
    let limit = Duration::from_secs(secs);
    if elapsed > limit {
        tally.fail(format!("took {:.1}s", elapsed.as_secs_f64()));
    }
    Ok(Outcome { id, title, passed: tally.failures.is_empty(), detail: tally.detail(), elapsed, limit })
}

/// Runs all criteria in order.
pub fn run_all() -> Vec<Outcome> {
    CRITERIA.iter().map(|c| run(c.0).expect("listed criterion")).collect()
}

/// Collects failed checks and a count of passed ones.
#[derive(Default)]
struct Tally {
    passed: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.failures.push(what);
    }

    fn note(&mut self, what: String) {
        self.notes.push(what);
    }

    fn detail(&self) -> String {
        let mut parts = Vec::new();
        if self.failures.is_empty() {
            parts.push(format!("{} checks hold", self.passed));
        } else {
            parts.push(format!(
                "{} checks hold, {} fail: {}",
                self.passed,
                self.failures.len(),
                self.failures.join("; ")
            ));
        }
        parts.extend(self.notes.iter().cloned());
        parts.join("; ")
    }
}

fn unit_mult(p: u32, types: &[(usize, usize)]) -> Vec<usize> {
    let mut m = vec![0; p as usize - 1];
    for &(t, k) in types {
        m[t - 1] += k;
    }
    m
}

fn add_mult(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Summands L_{2j−1} of L_k ⊗ L_k on which the swap acts by −1, using the
/// closed-form signs (−1)^{k−j}.
fn antisymmetric_part(p: u32, k: usize) -> Vec<usize> {
    let top = k.min(p as usize - k);
    let types: Vec<(usize, usize)> = (1..=top).filter(|j| (k - j) % 2 == 1).map(|j| (2 * j - 1, 1)).collect();
    unit_mult(p, &types)
}

fn is_zero_ver(m: &Matrix, src: &Obj, dst: &Obj) -> bool {
    VerMorphism::semisimplify(m, src, dst).is_zero()
}

/// The upstairs surjection V → g_{±1} of the engine.
fn generator_map(g: &GradedContragredient, positive: bool) -> Matrix {
    let side = if positive { g.positive() } else { g.negative() };
    side.piece(&[1]).expect("degree one is nonzero").cores.lift()
}

fn fusion_rules(t: &mut Tally) -> Result<()> {
    for p in [5u32, 7, 11] {
        for i in 1..p as usize {
            for j in 1..p as usize {
                let (up, surplus) = fusion_upstairs(p, i, j)?;
                let closed = fusion_rule(p, i, j)?;
                let covered: usize = closed.iter().enumerate().map(|(k, m)| (k + 1) * m).sum();
                let obj = VerObject::tensor(&VerObject::simple(p, i), &VerObject::simple(p, j));
                let blocks_ok = (1..p as usize).all(|k| obj.chains_of(k).len() == obj.mult_of(k))
                    && covered + p as usize * surplus == i * j;
                t.check(up == closed && blocks_ok, || {
                    format!("p{p} L{i}⊗L{j}: {} vs {}", format_mult(&up), format_mult(&closed))
                });
            }
        }
    }
    Ok(())
}

fn braiding_signs(t: &mut Tally) -> Result<()> {
    for p in [5u32, 7, 11] {
        for i in 1..p as usize {
            let signs = self_braiding_signs(p, i)?;
            let top = i.min(p as usize - i);
            let expected: Vec<i64> = (1..=top).map(|k| if (i - k) % 2 == 0 { 1 } else { -1 }).collect();
            t.check(signs == expected, || format!("p{p} L{i}: {signs:?}"));
        }
    }
    Ok(())
}

fn free_lie_degree_two(t: &mut Tally) -> Result<()> {
    for p in [5u32, 7, 11] {
        for i in 1..p as usize {
            let (_, obj) = flie_piece(&VerObject::simple(p, i), 2)?;
            let expected = antisymmetric_part(p, i);
            t.check(obj.mult() == expected.as_slice(), || format!("p{p} FLie(L{i})_2 = {}", format_mult(obj.mult())));
            t.check((obj.mult()[0] > 0) == (i % 2 == 0), || format!("p{p} L{i}: unit occurs {}", obj.mult()[0]));
        }
    }
    Ok(())
}

/// g = V* ⊕ X ⊕ V with [V, V*] = d and every other mixed bracket zero.
fn check_trivial_action(t: &mut Tally, name: &str, datum: &ContragredientDatum) -> Result<()> {
    let g = contragredient_compute(datum, 6)?;
    t.check(g.top_degree() == Some(1), || format!("{name}: top degree {:?}", g.top_degree()));
    if g.top_degree() != Some(1) {
        return Ok(());
    }
    let (v, vd, x) = (datum.v(), datum.v_dual(), datum.x().obj());
    t.check(g.mult(1) == v.mult() && g.mult(-1) == vd.mult() && g.mult(0) == x.mult(), || format!("{name}: pieces"));
    let (q, qm) = (generator_map(&g, true), generator_map(&g, false));
    let b = g.bracket(1, -1)?.mul_kron_id(&q, g.piece(-1).dim_upstairs()).mul_id_kron(&qm);
    let diff = b.sub(&datum.d().lift());
    t.check(is_zero_ver(&diff, &VerObject::tensor(v, vd), x), || format!("{name}: [V, V*] differs from d"));
    for (a, c) in [(0, 1), (0, -1), (1, 0), (-1, 0)] {
        let m = g.bracket(a, c)?;
        let src = VerObject::tensor(&g.piece(a), &g.piece(c));
        t.check(is_zero_ver(&m, &src, &g.piece(a + c)), || format!("{name}: [g{a}, g{c}] ≠ 0"));
    }
    Ok(())
}

fn trivial_action(t: &mut Tally) -> Result<()> {
    let p = 5;
    for k in [2usize, 3] {
        let mut cases: Vec<(String, Result<ContragredientDatum>)> =
            vec![(format!("one L{k}"), datum_over_one(p, k, 0, 1)), (format!("sl2 L{k}"), datum_over_sl2(p, k, 0, 1))];
        for (b, bt) in [(1, 0), (0, 1), (1, 1)] {
            cases.push((format!("gl2 (0,0,{b},{bt}) L{k}"), datum_over_gl2(p, k, 0, 0, b, bt)));
        }
        for (name, datum) in cases {
            match datum {
                Ok(d) => check_trivial_action(t, &name, &d)?,
                Err(Error::InvalidScalars(why)) => t.fail(format!("{name} rejected: {why}")),
                Err(e) => return Err(e),
            }
        }
    }
    t.note("the zero action is compatible with d only when d lands in the centre of X".into());
    Ok(())
}

fn degenerate_d(t: &mut Tally) -> Result<()> {
    let p = 5;
    for k in [2usize, 3] {
        let mut data = Vec::new();
        for a in [0, 1] {
            data.push((format!("one a={a} L{k}"), datum_over_one(p, k, a, 0)?));
            data.push((format!("sl2 ã={a} L{k}"), datum_over_sl2(p, k, a, 0)?));
            for at in [0, 1] {
                data.push((format!("gl2 ({a},{at},0,0) L{k}"), datum_over_gl2(p, k, a, at, 0, 0)?));
            }
        }
        for (name, datum) in data {
            let g = contragredient_compute(&datum, 4)?;
            t.check(g.top_degree() == Some(0) && g.mult(0) == datum.x().obj().mult(), || {
                format!("{name}: top {:?}", g.top_degree())
            });
        }
    }
    Ok(())
}

/// The scalar λ with m = λ·(id − c) on W ⊗ W modulo negligibles.
fn antisymmetrizer_coefficient(m: &Matrix, w: &Obj) -> Option<i64> {
    let p = w.p();
    let n = w.dim_upstairs();
    let ww = VerObject::tensor(w, w);
    let a = Matrix::identity(p, n * n).sub(&swap_matrix(p, n, n));
    (0..p).find(|&l| is_zero_ver(&m.sub(&a.scale(l)), &ww, &ww)).map(|l| fp::to_signed(l, p))
}

fn rank_one_over_unit(t: &mut Tally) -> Result<()> {
    for (p, k) in [(5u32, 2usize), (5, 3), (7, 2), (7, 3), (7, 4), (7, 5)] {
        let name = format!("p{p} k{k}");
        let datum = datum_over_one(p, k, 1, 1)?;
        let g = contragredient_compute(&datum, 6)?;
        let anti = antisymmetric_part(p, k);
        let want_top = if anti.iter().all(|&m| m == 0) { 1 } else { 2 };
        t.check(g.top_degree() == Some(want_top), || {
            let seq: Vec<String> = (1..=6).map(|n| format_mult(&g.mult(n))).collect();
            format!("{name}: no top degree {want_top}, g_1..g_6 = {}", seq.join(", "))
        });
        t.check(g.mult(2) == anti && g.mult(-2) == anti, || format!("{name}: g±2 = {}", format_mult(&g.mult(2))));
        let zero = vec![0; p as usize - 1];
        t.check(g.mult(3) == zero && g.mult(-3) == zero, || format!("{name}: g±3 = {}", format_mult(&g.mult(3))));
        for sign in [1i64, -1] {
            let n = 2 * sign;
            let piece = g.piece(n);
            let d = piece.dim_upstairs();
            let two = Matrix::identity(p, d).scale(fp::from_i64(2 * sign, p));
            let src = VerObject::tensor(datum.x().obj(), &piece);
            t.check(is_zero_ver(&g.x_action(n).sub(&two), &src, &piece), || {
                format!("{name}: [1, g{n}] ≠ {}", 2 * sign)
            });
            let same = g.bracket(n, sign)?;
            let src = VerObject::tensor(&piece, &g.piece(sign));
            t.check(is_zero_ver(&same, &src, &g.piece(3 * sign)), || format!("{name}: [g{n}, g{sign}] ≠ 0"));
        }
        // [g_{±2}, V^{(∓1)}] against ∓2·ι, with g_{±2} ⊂ W ⊗ W the image of id − c.
        for (positive, claimed) in [(true, -2i64), (false, 2)] {
            let s = if positive { 1 } else { -1 };
            let w = if positive { datum.v() } else { datum.v_dual() };
            let nw = w.dim_upstairs();
            let (q, qo) = (generator_map(&g, positive), generator_map(&g, !positive));
            let q_inv = VerMorphism::semisimplify(&q, w, &g.piece(s)).inverse()?.lift();
            let brk = g.bracket(s, s)?.mul_kron_id(&q, nw).mul_id_kron(&q);
            let low = q_inv.mul(&g.bracket(2 * s, -s)?.mul_id_kron(&qo));
            let m = low.mate_last(nw).mul(&brk);
            let lambda = antisymmetrizer_coefficient(&m, w);
            t.check(lambda == Some(claimed), || {
                format!("{name}: [g{}, g{}] = {lambda:?}·ι, not {claimed}·ι", 2 * s, -s)
            });
        }
        let pairing = g.pairing(2)?;
        let (a, b) = (g.piece(2), g.piece(-2));
        let mate = VerMorphism::semisimplify(&pairing.mate_last(b.dim_upstairs()), &a, &b.dual());
        t.check(mate.is_iso(), || format!("{name}: [g2, g-2] is degenerate"));
    }
    t.note("[[v,[v,w]],f] = 3ab·[v,w] upstairs, so g_3 ≠ 0 whenever the antisymmetric part is nonzero".into());
    Ok(())
}

fn classical_degenerations(t: &mut Tally) -> Result<()> {
    for p in [5u32, 7, 11] {
        let g = contragredient_compute(&datum_over_one(p, 1, 1, 1)?, 4)?;
        let one = unit_mult(p, &[(1, 1)]);
        t.check(g.top_degree() == Some(1) && (-1..=1).all(|n| g.mult(n) == one), || format!("p{p} k=1"));
        let k = p as usize - 1;
        let g = contragredient_compute(&datum_over_one(p, k, 1, 1)?, 4)?;
        let odd = unit_mult(p, &[(k, 1)]);
        let expected = [&one, &odd, &one, &odd, &one];
        t.check(g.top_degree() == Some(2) && (-2..=2).zip(expected).all(|(n, m)| g.mult(n) == *m), || {
            format!("p{p} k={k}: top {:?}", g.top_degree())
        });
    }
    Ok(())
}

fn gl_and_sl(t: &mut Tally) -> Result<()> {
    let p = 5;
    let simples = [1usize, 2];
    for special in [false, true] {
        let name = if special { "sl(L1+L2)" } else { "gl(L1+L2)" };
        let c = datum_gl_chain(p, &simples, special)?;
        t.check(check_datum(&c.datum), || format!("{name}: compatibility"));
        let derived = derive_d(c.datum.x(), c.datum.v(), c.datum.rho(), &c.k)?;
        t.check(&derived == c.datum.d(), || format!("{name}: derived d differs"));
        let g = contragredient_compute(&c.datum, 4)?;
        t.check(g.top_degree() == Some(1), || format!("{name}: top {:?}", g.top_degree()));
        // gl(L)_k = ⊕_{j−i=k} X_i ⊗ X_j*.
        let r = simples.len() as i64;
        for deg in -(r - 1)..=(r - 1) {
            let mut m = vec![0; p as usize - 1];
            for i in 0..r {
                let j = i + deg;
                if (0..r).contains(&j) {
                    m = add_mult(&m, &fusion_rule(p, simples[i as usize], simples[j as usize])?);
                }
            }
            if special && deg == 0 {
                m[0] -= 1;
            }
            t.check(g.mult(deg) == m, || format!("{name}: degree {deg} is {}", format_mult(&g.mult(deg))));
        }
        t.check(g.total_dim() == c.target.obj().dim_upstairs(), || format!("{name}: total dimension"));
    }
    Ok(())
}

/// Symmetrizable data of the suite with their forms K.
fn symmetrizable_suite() -> Result<Vec<(String, ContragredientDatum, InvariantForm)>> {
    let mut out = Vec::new();
    for (p, k) in [(5u32, 1usize), (5, 2), (5, 3), (5, 4), (7, 2), (7, 6)] {
        let sd = symmetrizable_over_one(p, k, 1)?;
        out.push((format!("one p{p} k{k}"), sd.datum()?, sd.k.clone()));
    }
    for (simples, special) in [(vec![1usize, 2], false), (vec![1, 2], true), (vec![2, 1, 2], false)] {
        let c = datum_gl_chain(5, &simples, special)?;
        out.push((format!("chain {simples:?} special={special}"), c.datum, c.k));
    }
    let cartan: [(u32, &str, Vec<Vec<i64>>); 4] = [
        (5, "A1", vec![vec![2]]),
        (5, "A2", vec![vec![2, -1], vec![-1, 2]]),
        (7, "B2", vec![vec![2, -2], vec![-1, 2]]),
        (7, "G2", vec![vec![2, -1], vec![-3, 2]]),
    ];
    for (p, name, a) in cartan {
        let c = datum_from_cartan_matrix(p, &a, &vec![false; a.len()])?;
        let k = c.k.ok_or_else(|| Error::InvalidInput(format!("{name} is not symmetrizable")))?;
        out.push((format!("{name} p{p}"), c.datum, k));
    }
    Ok(out)
}

fn form_agreement(t: &mut Tally) -> Result<()> {
    let n = 6;
    for (name, datum, k) in symmetrizable_suite()? {
        let g = contragredient_compute(&datum, n)?;
        let kernel = flie_quotient(&datum, n, DEFAULT_ENGINE_BUDGET)?;
        let radical = radical_quotient(&datum, n, DEFAULT_ENGINE_BUDGET)?;
        let common = kernel.quotient.len().min(radical.len());
        t.check(common >= n.min(g.top_degree().map_or(n, |t| t + 1)), || {
            format!("{name}: only {common} degrees computed")
        });
        for deg in 0..common {
            let engine = g.mult(deg as i64 + 1);
            t.check(kernel.quotient[deg] == radical[deg] && radical[deg] == engine, || {
                format!(
                    "{name}: degree {} kernel {} radical {}",
                    deg + 1,
                    format_mult(&kernel.quotient[deg]),
                    format_mult(&radical[deg])
                )
            });
        }
        t.check(kernel.ideal_stable, || format!("{name}: m is not X-stable"));
        let form = GradedForm::new(&g, &k)?;
        let report = form.check(&g, &k)?;
        t.check(report.all(), || format!("{name}: form {report:?}"));
        if g.stabilized() {
            let b = form.on_assembled(&g)?;
            t.check(b.is_symmetric() && b.is_invariant() && b.is_nondegenerate(), || format!("{name}: assembled form"));
        }
    }
    Ok(())
}

fn semidirect_decomposition(t: &mut Tally) -> Result<()> {
    let (p, k, n) = (5u32, 2usize, 8usize);
    let l3 = unit_mult(p, &[(3, 1)]);
    for (a, at) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        let big = contragredient_compute(&datum_over_gl2(p, k, a, at, 1, 0)?, n)?;
        let small = contragredient_compute(&datum_over_one(p, k, a, 1)?, n)?;
        for deg in -(n as i64)..=(n as i64) {
            let want = if deg == 0 { add_mult(&small.mult(0), &l3) } else { small.mult(deg) };
            t.check(big.mult(deg) == want, || format!("({a},{at},1,0) degree {deg}: {}", format_mult(&big.mult(deg))));
        }
        t.check(big.stabilized() == small.stabilized(), || format!("({a},{at},1,0): stabilization differs"));
    }
    Ok(())
}

/// Every datum of the suite, by name.
fn all_data() -> Result<Vec<(String, ContragredientDatum)>> {
    let mut out: Vec<(String, ContragredientDatum)> =
        symmetrizable_suite()?.into_iter().map(|(n, d, _)| (n, d)).collect();
    for (p, k) in [(5u32, 2usize), (5, 3), (7, 2), (7, 3), (7, 4), (7, 5)] {
        out.push((format!("one (1,1) p{p} k{k}"), datum_over_one(p, k, 1, 1)?));
    }
    out.push(("one (0,1) p5 k2".into(), datum_over_one(5, 2, 0, 1)?));
    out.push(("one (1,0) p5 k2".into(), datum_over_one(5, 2, 1, 0)?));
    for k in [2usize, 3] {
        out.push((format!("sl2 (1,1) p5 k{k}"), datum_over_sl2(5, k, 1, 1)?));
    }
    for (a, at, b, bt) in [
        (0, 0, 1, 0),
        (0, 1, 1, 0),
        (1, 0, 1, 0),
        (1, 1, 1, 0),
        (0, 1, 0, 1),
        (1, 1, 0, 1),
        (1, 1, 1, 1),
        (1, 1, 3, 1),
        (1, 1, 4, 1),
    ] {
        out.push((format!("gl2 ({a},{at},{b},{bt}) p5 k2"), datum_over_gl2(5, 2, a, at, b, bt)?));
    }
    Ok(out)
}

fn mirror_symmetry(t: &mut Tally) -> Result<()> {
    for (name, datum) in all_data()? {
        let g = contragredient_compute(&datum, 8)?;
        t.check(g.checks.mirror, || name.to_string());
    }
    Ok(())
}

/// Root multiplicities of sl_3 over F_p read off the adjoint action of the
/// diagonal torus on the basis E_ij, in coordinates of the simple roots.
fn sl3_root_multiplicities(p: u32) -> Result<BTreeMap<Vec<i64>, usize>> {
    let e = |i: usize, j: usize| Matrix::from_fn(p, 3, 3, |a, b| u32::from(a == i && b == j));
    let mut basis = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                basis.push(e(i, j));
            }
        }
    }
    basis.push(e(0, 0).sub(&e(1, 1)));
    basis.push(e(1, 1).sub(&e(2, 2)));
    let sc = StructureConstants::from_matrices(p, &basis, 0)?;
    let b = sc.bracket_matrix()?;
    let dim = basis.len();
    // ξ(h_i) for the simple roots: the Cartan matrix of A_2.
    let cartan = Matrix::from_rows(p, &[vec![2, -1], vec![-1, 2]]);
    let inv = cartan.inverse().ok_or_else(|| Error::InvalidInput("singular Cartan matrix".into()))?;
    let mut out = BTreeMap::new();
    for v in 0..dim {
        let mut weight = Vec::new();
        for h in [6usize, 7] {
            // ad(h) must be diagonal on the root basis.
            for r in 0..dim {
                if r != v && b.get(r, h * dim + v) != 0 {
                    return Err(Error::InvalidInput("basis is not a weight basis".into()));
                }
            }
            weight.push(b.get(v, h * dim + v));
        }
        if weight.iter().all(|&w| w == 0) {
            continue;
        }
        // weight = Σ c_j ξ_j, so c = A⁻ᵀ · weight with A symmetric here.
        let c = inv.apply(&weight);
        let coords: Vec<i64> = c.iter().map(|&x| fp::to_signed(x, p)).collect();
        *out.entry(coords).or_insert(0) += 1;
    }
    Ok(out)
}

fn classical_a2(t: &mut Tally) -> Result<()> {
    let p = 5;
    let c = datum_from_cartan_matrix(p, &[vec![2, -1], vec![-1, 2]], &[false, false])?;
    let g = contragredient_compute(&c.datum, 6)?;
    t.check(g.stabilized() && g.total_dim() == 8, || {
        format!("top {:?}, total dimension {}", g.top_degree(), g.total_dim())
    });
    let q = q_grading(&c.datum, 6, DEFAULT_ENGINE_BUDGET)?;
    let mut table = BTreeMap::new();
    for (sign, side) in [(1i64, &q.positive), (-1, &q.negative)] {
        for (alpha, m) in side {
            let copies = m[0];
            t.check(m.iter().skip(1).all(|&x| x == 0), || format!("{alpha:?} is not a multiple of L1"));
            let key: Vec<i64> = alpha.iter().map(|&a| sign * a as i64).collect();
            table.insert(key, copies);
        }
    }
    let oracle = sl3_root_multiplicities(p)?;
    t.check(table == oracle, || format!("Q-multiplicities {table:?} vs {oracle:?}"));
    t.check(oracle.len() == 6 && oracle.values().all(|&m| m == 1), || format!("oracle {oracle:?}"));
    Ok(())
}

fn gl2_scan(t: &mut Tally) -> Result<()> {
    for p in [5u32, 7] {
        let s = scan_gl2(p, 2, 8, DEFAULT_ENGINE_BUDGET)?;
        for r in s.rows.iter().filter(|r| r.column == crate::contragredient::Column::Full) {
            let row = format!("p{p} ({},{},{},{})", r.a, r.atilde, r.b, r.btilde);
            match &r.status {
                RowStatus::Computed { top_degree: Some(_), .. } => t.check(true, String::new),
                RowStatus::Computed { .. } => t.fail(format!("{row} not stabilized")),
                RowStatus::Invalid { .. } => t.fail(format!("{row} invalid")),
                RowStatus::Budget => t.fail(format!("{row} over budget")),
            }
        }
        t.note(format!(
            "p{p}: full-rank top degrees {:?}, 1, 2, 3 all occur: {}",
            s.full_rank_top_degrees, s.has_top_degrees_1_2_3
        ));
    }
    Ok(())
}

fn axiom_regression(t: &mut Tally) -> Result<()> {
    let mut algebras: Vec<(String, LieAlgebra)> = Vec::new();
    for p in [5u32, 7] {
        for i in 1..p as usize {
            let li = VerObject::simple(p, i);
            algebras.push((format!("gl(L{i}) p{p}"), gl(&li)));
            algebras.push((format!("sl(L{i}) p{p}"), sl(&li).alg));
        }
        for (i, j) in [(1usize, 2usize), (2, 3), (1, p as usize - 1)] {
            let l = VerObject::direct_sum(p, &[&VerObject::simple(p, i), &VerObject::simple(p, j)]);
            algebras.push((format!("gl(L{i}+L{j}) p{p}"), gl(&l)));
        }
    }
    for (name, datum) in all_data()? {
        algebras.push((format!("torus of {name}"), datum.x().clone()));
        let m = datum.module();
        t.check(check_module(&m), || format!("module of {name}"));
        t.check(check_module(&dual_action(&m)), || format!("dual module of {name}"));
        let g = contragredient_compute(&datum, 8)?;
        if g.stabilized() {
            algebras.push((format!("g of {name}"), g.assemble()?.alg));
        }
    }
    for (name, alg) in &algebras {
        t.check(check_lie_axioms(alg), || name.clone());
    }
    // sl_2 along e against sl(L_2): both brackets are scalars c on the
    // one-dimensional Hom(L_3 ⊗ L_3, L_3); scaling by c_1/c_2 matches them.
    let p = 5;
    let sl2 = StructureConstants::from_fn(p, 3, 0, |i, j| {
        let mut v = vec![0i64; 3];
        match (i, j) {
            (0, 2) => v[1] = 1,
            (2, 0) => v[1] = -1,
            (1, 0) => v[0] = 2,
            (0, 1) => v[0] = -2,
            (1, 2) => v[2] = -2,
            (2, 1) => v[2] = 2,
            _ => {}
        }
        v
    });
    let g = semisimplify_lie(&sl2)?;
    let s = sl(&VerObject::simple(p, 2)).alg;
    t.check(g.obj().mult() == s.obj().mult(), || "semisimplified sl_2 is not L3".into());
    let scalar = |a: &LieAlgebra| {
        let blk = a.bracket().block(3);
        (blk.shape() == (1, 1)).then(|| blk.get(0, 0))
    };
    match (scalar(&g), scalar(&s)) {
        (Some(c1), Some(c2)) if c1 != 0 && c2 != 0 => {
            let lambda = fp::mul(c1, fp::inv(c2, p), p);
            t.check(fp::mul(lambda, c1, p) == fp::mul(fp::mul(lambda, lambda, p), c2, p), || "no rescaling".into());
        }
        _ => t.fail("bracket on L3 is not a nonzero scalar".into()),
    }
    t.note(format!("{} algebras checked", algebras.len()));
    Ok(())
}
