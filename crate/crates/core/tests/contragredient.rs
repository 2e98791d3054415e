//! Contragredient Lie algebras g(ρ, d): catalog examples, the invariant
//! form, the multidegree refinement, reports and the free Lie oracles.

use proptest::prelude::*;
use verlie::contragredient::*;
use verlie::lie_objects::check_lie_axioms;
use verlie::verp::format_mult;

fn mults(g: &GradedContragredient) -> Vec<String> {
    g.degree_range().map(|n| format_mult(&g.mult(n))).collect()
}

#[test]
fn unit_generator_gives_sl2() {
    let g = contragredient_compute(&datum_over_one(5, 1, 1, 1).unwrap(), 4).unwrap();
    assert_eq!(g.top_degree(), Some(1));
    assert_eq!(mults(&g), ["L1", "L1", "L1"]);
    assert!(check_lie_axioms(&g.assemble().unwrap().alg));
}

#[test]
fn top_simple_generator_stops_in_degree_two() {
    let g = contragredient_compute(&datum_over_one(7, 6, 1, 1).unwrap(), 6).unwrap();
    assert_eq!(g.top_degree(), Some(2));
    assert_eq!(mults(&g), ["L1", "L6", "L1", "L6", "L1"]);
}

#[test]
fn rank_one_over_the_unit_keeps_growing() {
    let g = contragredient_compute(&datum_over_one(5, 2, 1, 1).unwrap(), 6).unwrap();
    assert!(!g.stabilized());
    assert_eq!(format_mult(&g.mult(3)), "L2");
    assert_eq!(format_mult(&g.mult(4)), "L3");
}

#[test]
fn zero_pairing_gives_only_the_torus() {
    let d = datum_over_gl2(5, 2, 1, 1, 0, 0).unwrap();
    let g = contragredient_compute(&d, 4).unwrap();
    assert_eq!(g.top_degree(), Some(0));
    assert_eq!(g.mult(0), d.x().obj().mult());
}

#[test]
fn sl_action_with_zero_scalar_is_rejected() {
    assert!(matches!(datum_over_sl2(5, 2, 0, 1), Err(verlie::Error::InvalidScalars(_))));
    assert!(matches!(datum_over_sl2(5, 1, 1, 1), Err(verlie::Error::InvalidScalars(_))));
}

#[test]
fn gl_chain_recovers_gl() {
    let c = datum_gl_chain(5, &[1, 2], false).unwrap();
    let g = contragredient_compute(&c.datum, 4).unwrap();
    assert_eq!(g.top_degree(), Some(1));
    assert_eq!(mults(&g), ["L2", "2L1 + L3", "L2"]);
    assert_eq!(g.total_dim(), c.target.obj().dim_upstairs());
}

#[test]
fn chain_multidegrees_look_like_gl3() {
    let c = datum_gl_chain(5, &[1, 2, 1], false).unwrap();
    let q = q_grading(&c.datum, 6, DEFAULT_ENGINE_BUDGET).unwrap();
    assert_eq!(q.rank, 2);
    assert!(q.stabilized);
    let got: Vec<(Vec<usize>, String)> = q.positive.iter().map(|(a, m)| (a.clone(), format_mult(m))).collect();
    let want = vec![(vec![0, 1], "L2".to_string()), (vec![1, 0], "L2".to_string()), (vec![1, 1], "L1".to_string())];
    assert_eq!(got, want);
    assert_eq!(q.positive.keys().collect::<Vec<_>>(), q.negative.keys().collect::<Vec<_>>());
    let g = contragredient_compute(&c.datum, 6).unwrap();
    for n in 1..=2 {
        assert_eq!(q.height_mult(n), g.mult(n));
        assert_eq!(q.height_mult(-n), g.mult(-n));
    }
}

#[test]
fn cartan_a2_has_dimension_eight() {
    let c = datum_from_cartan_matrix(5, &[vec![2, -1], vec![-1, 2]], &[false, false]).unwrap();
    let g = contragredient_compute(&c.datum, 6).unwrap();
    assert_eq!(g.top_degree(), Some(2));
    assert_eq!(g.total_dim(), 8);
}

#[test]
fn invariant_form_on_symmetrizable_data() {
    let sd = symmetrizable_over_one(5, 4, 1).unwrap();
    let g = contragredient_compute(&sd.datum().unwrap(), 6).unwrap();
    let form = GradedForm::new(&g, &sd.k).unwrap();
    assert!(form.check(&g, &sd.k).unwrap().all());
    let b = form.on_assembled(&g).unwrap();
    assert!(b.is_symmetric() && b.is_invariant() && b.is_nondegenerate());

    let c = datum_from_cartan_matrix(7, &[vec![2, -2], vec![-1, 2]], &[false, false]).unwrap();
    let k = c.k.clone().unwrap();
    let g = contragredient_compute(&c.datum, 6).unwrap();
    let form = GradedForm::new(&g, &k).unwrap();
    assert!(form.check(&g, &k).unwrap().all());
    assert_eq!(g.total_dim(), 10);
}

#[test]
fn derived_pairing_matches_the_chain() {
    let c = datum_gl_chain(5, &[1, 2], true).unwrap();
    let d = derive_d(c.datum.x(), c.datum.v(), c.datum.rho(), &c.k).unwrap();
    assert_eq!(&d, c.datum.d());
    assert!(check_datum(&c.datum));
}

#[test]
fn report_json_round_trip() {
    let c = datum_gl_chain(5, &[1, 2, 1], false).unwrap();
    let r = report(&c.datum, &ReportOptions { max_degree: 4, ..ReportOptions::default() }).unwrap();
    let json = r.to_json();
    let back = Report::from_json(&json).unwrap();
    assert_eq!(back, r);
    assert_eq!(back.to_json(), json);
    assert!(json.starts_with("{\"checks\":"));
    assert!(r.q_pieces.is_some());
    assert_eq!(r.checks.form_agreement, Some(true));
    assert!(r.to_text().contains("stabilized, top degree 2"));
}

#[test]
fn scan_reports_every_row() {
    let s = scan_gl2(5, 2, 6, DEFAULT_ENGINE_BUDGET).unwrap();
    assert_eq!(s.rows.len(), gl2_table(5).len());
    assert_eq!(s.rows.len(), 4 * (2 + 4));
    let json = s.to_json();
    let back: ScanReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, s);
    let invalid = s.rows.iter().filter(|r| matches!(r.status, RowStatus::Invalid { .. })).count();
    assert!(invalid > 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn engine_agrees_with_the_free_lie_quotient(
        p in proptest::sample::select(vec![5u32, 7]),
        k in 1usize..7,
        a in 0i64..7,
        b in 0i64..7,
    ) {
        let k = 1 + (k - 1) % (p as usize - 1);
        let datum = datum_over_one(p, k, a, b).unwrap();
        let g = contragredient_compute(&datum, 4).unwrap();
        let q = flie_quotient(&datum, 4, DEFAULT_ENGINE_BUDGET).unwrap();
        for (i, m) in q.quotient.iter().enumerate() {
            prop_assert_eq!(m, &g.mult(i as i64 + 1));
        }
        prop_assert!(g.checks.mirror);
    }

    #[test]
    fn mirror_and_module_structure_over_gl2(a in 0i64..2, at in 0i64..2, b in 0i64..5, bt in 0i64..2) {
        if let Ok(datum) = datum_over_gl2(5, 2, a, at, b, bt) {
            prop_assert!(check_datum(&datum));
            prop_assert!(datum.is_module() && datum.x_is_lie());
            let g = contragredient_compute(&datum, 5).unwrap();
            prop_assert!(g.checks.mirror);
            for n in 1..=5 {
                prop_assert_eq!(g.mult(n).iter().sum::<usize>() == 0, g.mult(-n).iter().sum::<usize>() == 0);
            }
        }
    }
}
