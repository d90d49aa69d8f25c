use std::sync::OnceLock;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::group::beta5;

fn h3() -> &'static Engine {
    static E: OnceLock<Engine> = OnceLock::new();
    E.get_or_init(|| Engine::new(CoxeterType::H3, Variant::Standard).unwrap())
}

fn h4() -> &'static Engine {
    static E: OnceLock<Engine> = OnceLock::new();
    E.get_or_init(|| Engine::new(CoxeterType::H4, Variant::Standard).unwrap())
}

fn nf(e: &Engine, text: &str) -> NormalForm {
    e.eval(text).unwrap()
}

fn e1() -> NormalForm {
    let id = ElemId::IDENTITY;
    NormalForm { delta: 0, cell: Cell::E1 { u: id, v: id, w: id } }
}

fn top() -> NormalForm {
    let id = ElemId::IDENTITY;
    NormalForm { delta: 0, cell: Cell::E1E3 { u: id, w: id } }
}

#[test]
fn left_multiplication_examples() {
    let e = h3();
    let r1 = e.group().generator(0);
    assert_eq!(e.lmul_r(0, &NormalForm::identity()).unwrap().cell, Cell::Group(r1));
    assert_eq!(e.lmul_r(0, &e1()).unwrap(), e1());
    assert_eq!(e.lmul_r(2, &top()).unwrap(), top());
    assert_eq!(e.lmul_e(0, &e1()).unwrap(), NormalForm { delta: 2, ..e1() });
    let b5 = e.system().system().index_of(&beta5(e.system().system()).unwrap()).unwrap();
    assert_eq!(e.lmul_e(b5, &top()).unwrap(), NormalForm { delta: 2, ..top() });
    assert_eq!(nf(e, "e1"), e1());
    assert_eq!(nf(e, "e1 e3"), top());
    assert!(e.lmul_r(3, &e1()).is_err());
    assert!(e.lmul_e(15, &e1()).is_err());
}

#[test]
fn e2_e1_reduces_through_the_dihedral_element() {
    for e in [h3(), h4()] {
        assert_eq!(nf(e, "e2 e1"), nf(e, "r1 r2 r1 r2 e1"));
        assert_ne!(nf(e, "e2 e1"), nf(e, "r1 r2 e1"));
        assert_eq!(nf(e, "r2 e1 r2 e1"), nf(e, "r2 e1"));
        assert_ne!(nf(e, "r2 e1 r2 e1"), nf(e, "r2 e1 r2"));
    }
}

#[test]
fn normal_form_examples() {
    for e in [h3(), h4()] {
        assert_eq!(nf(e, "e1 r2 e1"), e1());
        assert_eq!(nf(e, "e1 e2 e1"), e1());
        assert_eq!(nf(e, "e1 r2 r1 r2 e1"), e1());
        assert_eq!(nf(e, "e1 e1"), NormalForm { delta: 2, ..e1() });
        assert_eq!(nf(e, "d e1 d- d-"), NormalForm { delta: -1, ..e1() });
    }
    let mut w = vec![Generator::E(0)];
    w.extend(relations::central_word());
    assert_eq!(h4().normal_form(&w).unwrap(), e1());
}

#[test]
fn chen_variant_keeps_z() {
    let chen = Engine::with_system(h4().shared_system(), Variant::Chen).unwrap();
    let mut w = vec![Generator::E(0)];
    w.extend(relations::central_word());
    let x = chen.normal_form(&w).unwrap();
    assert_ne!(x, e1());
    assert!(matches!(x.cell, Cell::E1 { .. }));
    assert_eq!(chen.total_forms(), 452025);
    // applying z twice returns to e1
    w.extend(relations::central_word());
    assert_eq!(chen.normal_form(&w).unwrap(), e1());
}

#[test]
fn multiply_examples() {
    let e = h3();
    let r1 = nf(e, "r1");
    assert_eq!(e.multiply(&r1, &r1).unwrap(), NormalForm::identity());
    assert_eq!(e.multiply(&e1(), &e1()).unwrap(), NormalForm { delta: 2, ..e1() });
    let x = nf(e, "r2 e1 r3 d");
    assert_eq!(e.multiply(&x, &NormalForm::identity()).unwrap(), x);
    assert_eq!(e.multiply(&NormalForm::identity(), &x).unwrap(), x);
}

#[test]
fn canonical_word_reproduces_every_h3_form() {
    let e = h3();
    for x in e.all_forms() {
        let x = NormalForm { delta: -3, ..x };
        assert_eq!(e.normal_form(&e.canonical_word(&x).0).unwrap(), x);
    }
}

#[test]
fn op_on_h3_is_word_reversal_and_an_involution() {
    let e = h3();
    assert_eq!(e.op(&nf(e, "r1 r2")).unwrap(), nf(e, "r2 r1"));
    assert_eq!(e.op(&e1()).unwrap(), e1());
    for x in e.all_forms() {
        let y = e.op(&x).unwrap();
        assert_eq!(e.op(&y).unwrap(), x);
        assert_eq!(y, e.normal_form(&e.cell_word(&x.cell).reversed().0).unwrap());
    }
}

#[test]
fn tabulated_reductions_match_dihedral_elements() {
    for e in [h3(), h4()] {
        let g = e.group();
        let s = e.system().system();
        for gamma in 1..s.len() {
            if s.orthogonal(gamma, 0) {
                assert!(e.e1_reduction(gamma).is_none());
                continue;
            }
            let t = e.e1_reduction(gamma).unwrap();
            assert_eq!(g.apply(t, SignedRoot::positive(0)).index(), gamma);
            let rg = g.id_of(&crate::group::GroupElement::reflection(s, gamma).unwrap()).unwrap();
            let movers: Vec<ElemId> = g
                .closure(&[g.generator(0), rg])
                .into_iter()
                .filter(|&x| g.apply(x, SignedRoot::positive(0)).index() == gamma)
                .collect();
            assert_eq!(movers.len(), 2);
            for x in movers {
                assert_eq!(e.canon_e1(x, ElemId::IDENTITY).unwrap(), e.canon_e1(t, ElemId::IDENTITY).unwrap());
            }
        }
    }
}

#[test]
fn top_reduction_independent_of_basis_member() {
    for e in [h3(), h4()] {
        let g = e.group();
        let s = e.system().system();
        let basis = e.cells().basis().clone();
        for gamma in (0..s.len()).filter(|&r| !basis.contains(r)) {
            let expected = e.canon_e1e3(e.top_reduction(gamma).unwrap(), ElemId::IDENTITY);
            for bi in basis.iter().filter(|&b| !s.orthogonal(gamma, b)) {
                let t = e.cells().d1_for_root(bi);
                let inner = g.apply(g.inv(t), SignedRoot::positive(gamma)).index();
                let h = g.mul(g.mul(t, e.e1_reduction(inner).unwrap()), g.inv(t));
                assert_eq!(e.canon_e1e3(h, ElemId::IDENTITY), expected);
            }
        }
    }
}

#[test]
fn h3_census_is_closed_and_reachable() {
    let r = h3().census().unwrap();
    assert_eq!(r.counts, CensusCounts { group: 120, e1: 900, e1e3: 25, total: 1045 });
    assert!(r.passed(), "{r:?}");
}

#[test]
fn h3_relations_hold() {
    let e = h3();
    let r = e.verify_relations().unwrap();
    assert!(r.passed(), "{r:?}");
    let defining: Vec<&FamilyReport> = r.families.iter().filter(|f| f.defining).collect();
    assert_eq!(defining.len(), 17);
    assert!(!defining[16].applicable);
    assert_eq!(defining[16].instances, 0);
    let forms: Vec<NormalForm> = e.all_forms().collect();
    let r = e.verify_relations_on(&forms).unwrap();
    assert!(r.passed(), "{r:?}");
}

#[test]
fn h4_relations_hold() {
    let r = h4().verify_relations().unwrap();
    assert!(r.passed(), "{r:?}");
    assert!(r.families.iter().all(|f| f.applicable && f.instances > 0));
}

#[test]
fn relations_in_random_context() {
    let r = h3().verify_relations_in_context(200, 7).unwrap();
    assert!(r.passed(), "{r:?}");
}

#[test]
fn braid_typo_readings_fail() {
    // The printed right-hand sides end in r1 r1; those readings do not hold.
    let e = h3();
    assert_ne!(nf(e, "r1 r2 r1 r2 r1"), nf(e, "r2 r1 r2 r1 r1"));
    assert_ne!(nf(e, "r1 r2 e1 r2 r1"), nf(e, "r2 r1 e2 r1 r1"));
}

#[test]
fn i25_entries_hold_in_h3() {
    let e = h3();
    for entry in i25_table().unwrap() {
        assert_eq!(nf(e, &entry.lhs), nf(e, &entry.rhs), "{entry:?}");
    }
}

#[test]
fn action_examples() {
    let e = h3();
    let s = e.system().system();
    let b5 = s.index_of(&beta5(s).unwrap()).unwrap();
    let set = |v: &[usize]| OrthoSet::new(s, v.iter().copied()).unwrap();
    assert_eq!(e.action(Generator::E(0), &OrthoSet::empty()).unwrap(), set(&[0]));
    assert_eq!(e.action(Generator::E(0), &set(&[0])).unwrap(), set(&[0]));
    assert_eq!(e.action(Generator::E(0), &set(&[2])).unwrap(), set(&[0, 2, b5]));
    assert_eq!(e.action(Generator::Delta, &set(&[2])).unwrap(), set(&[2]));
}

#[test]
fn action_tracks_left_roots_on_h3() {
    let e = h3();
    let k = e.rank() as u8;
    for x in e.all_forms() {
        let b = left_roots(e, &x.cell);
        for gen in (0..k).map(Generator::R).chain((0..k).map(Generator::E)) {
            let y = e.lmul(gen, &x).unwrap();
            assert_eq!(e.action(gen, &b).unwrap(), left_roots(e, &y.cell), "{gen} on {:?}", x.cell);
        }
    }
}

#[test]
fn action_respects_relations() {
    for e in [h3(), h4()] {
        let all = e.cells().admissible().all();
        for inst in relation_instances(e.kind(), e.variant()) {
            for b in &all {
                assert_eq!(e.act_word(&inst.lhs, b).unwrap(), e.act_word(&inst.rhs, b).unwrap(), "{}", inst.label());
            }
        }
    }
}

#[test]
fn json_round_trip() {
    let e = h3();
    for x in e.all_forms().step_by(7) {
        let x = NormalForm { delta: 4, ..x };
        let j = e.to_json(&x);
        let text = serde_json::to_string(&j).unwrap();
        let back: NormalFormJson = serde_json::from_str(&text).unwrap();
        assert_eq!(e.from_json(&back).unwrap(), x);
    }
    let j = e.to_json(&e1());
    assert_eq!(
        serde_json::to_value(&j).unwrap(),
        serde_json::json!({"delta": 0, "cell": "e1", "u": "", "v": "", "w": ""})
    );
    let bad = NormalFormJson { u: "r1".into(), ..j };
    assert!(e.from_json(&bad).is_err());
}

#[test]
fn associativity_exhaustive_on_h3_sample() {
    use rand::seq::SliceRandom;
    let e = h3();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let forms: Vec<NormalForm> = e.all_forms().collect();
    let sample: Vec<NormalForm> = forms.choose_multiple(&mut rng, 50).copied().collect();
    for a in &sample {
        for b in &sample {
            let ab = e.multiply(a, b).unwrap();
            for c in &sample {
                assert_eq!(e.multiply(&ab, c).unwrap(), e.multiply(a, &e.multiply(b, c).unwrap()).unwrap());
            }
        }
    }
}

fn arb_form(e: &'static Engine) -> impl Strategy<Value = NormalForm> {
    (0..e.total_forms(), -3i64..4).prop_map(move |(i, d)| NormalForm { delta: d, cell: e.cell_at(i).unwrap() })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn h4_associativity(a in arb_form(h4()), b in arb_form(h4()), c in arb_form(h4())) {
        let e = h4();
        let left = e.multiply(&e.multiply(&a, &b).unwrap(), &c).unwrap();
        let right = e.multiply(&a, &e.multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn h4_op_is_anti_automorphism(a in arb_form(h4()), b in arb_form(h4())) {
        let e = h4();
        let lhs = e.op(&e.multiply(&a, &b).unwrap()).unwrap();
        let rhs = e.multiply(&e.op(&b).unwrap(), &e.op(&a).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(e.op(&e.op(&a).unwrap()).unwrap(), a);
    }

    #[test]
    fn multiply_matches_word_concatenation(a in arb_form(h4()), b in arb_form(h4())) {
        let e = h4();
        let word = e.canonical_word(&a).concat(&e.canonical_word(&b));
        prop_assert_eq!(e.multiply(&a, &b).unwrap(), e.normal_form(&word.0).unwrap());
    }

    #[test]
    fn group_products_keep_delta(i in 0usize..14400, j in 0usize..14400) {
        let e = h4();
        let a = NormalForm { delta: 0, cell: Cell::Group(ElemId(i as u32)) };
        let b = NormalForm { delta: 0, cell: Cell::Group(ElemId(j as u32)) };
        prop_assert_eq!(e.multiply(&a, &b).unwrap().delta, 0);
    }

    #[test]
    fn h4_action_tracks_left_roots(x in arb_form(h4()), code in 0u8..8) {
        let e = h4();
        let gen = if code < 4 { Generator::R(code) } else { Generator::E(code - 4) };
        let y = e.lmul(gen, &x).unwrap();
        prop_assert!(e.is_valid(&y));
        prop_assert_eq!(e.action(gen, &left_roots(e, &x.cell)).unwrap(), left_roots(e, &y.cell));
    }
}
