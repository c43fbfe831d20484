//! parse(render(x)) = x for ring specs, elements, ideals, job specs and
//! reports.

use std::collections::BTreeMap;

use proptest::prelude::*;
use ringinv::codec;
use ringinv::job::{self, Command, JobSpec};
use ringinv_core::field::{PrimeField, Rationals, ScalarSpec};
use ringinv_core::geninv::{drazin_inverse, moore_penrose_report};
use ringinv_core::ideal::{IdealLattice, Side};
use ringinv_core::ring::{Involution, MatrixRing, Ring, RingSpec, Zn};
use serde_json::{json, Value};

fn f5() -> MatrixRing<PrimeField> {
    MatrixRing::new(PrimeField::new(5).expect("prime"), 2, Involution::Transpose).expect("M2(F5)")
}

fn q2() -> MatrixRing<Rationals> {
    MatrixRing::new(Rationals, 2, Involution::Transpose).expect("M2(Q)")
}

fn text_round_trip(v: &Value) -> Value {
    serde_json::from_str(&job::render(v)).expect("rendered JSON parses")
}

fn ring_spec() -> impl Strategy<Value = RingSpec> {
    prop_oneof![
        (2u64..500).prop_map(RingSpec::Modular),
        (1usize..4, prop_oneof![Just(ScalarSpec::Rationals), prop::sample::select(vec![2u64, 3, 5, 7, 11]).prop_map(ScalarSpec::PrimeField)], any::<bool>())
            .prop_map(|(size, scalars, star)| RingSpec::Matrix {
                size,
                scalars,
                involution: if star { Involution::Transpose } else { Involution::None },
            }),
    ]
}

fn rational_text() -> impl Strategy<Value = String> {
    (-50i64..50, 1i64..12).prop_map(|(n, d)| format!("{n}/{d}"))
}

proptest! {
    #[test]
    fn ring_specs(spec in ring_spec()) {
        let v = codec::ring_to_json(&spec);
        prop_assert_eq!(codec::ring_from_json(&text_round_trip(&v)).expect("parses"), spec);
    }

    #[test]
    fn residues(n in 2u64..200, v in 0u64..1000) {
        let r = Zn::new(n).expect("modulus");
        let x = v % n;
        prop_assert_eq!(codec::parse_elem(&r, &text_round_trip(&codec::elem(&r, &x))).expect("parses"), x);
    }

    #[test]
    fn prime_field_matrices(entries in prop::array::uniform4(0i64..5)) {
        let r = f5();
        let x = r.from_ints(&[&entries[..2], &entries[2..]]).expect("element");
        prop_assert_eq!(codec::parse_elem(&r, &text_round_trip(&codec::elem(&r, &x))).expect("parses"), x);
    }

    #[test]
    fn rational_matrices(entries in prop::collection::vec(rational_text(), 4)) {
        let r = q2();
        let x = r.from_strs(&[&[entries[0].as_str(), entries[1].as_str()], &[entries[2].as_str(), entries[3].as_str()]]).expect("element");
        let v = codec::elem(&r, &x);
        prop_assert_eq!(codec::parse_elem(&r, &text_round_trip(&v)).expect("parses"), x.clone());
        // Rendering is canonical: a second pass changes nothing.
        prop_assert_eq!(codec::elem(&r, &codec::parse_elem(&r, &v).expect("parses")), v);
    }

    #[test]
    fn matrix_ideals(entries in prop::array::uniform4(0i64..5), right in any::<bool>(), ann in any::<bool>()) {
        let r = f5();
        let side = if right { Side::Right } else { Side::Left };
        let a = r.from_ints(&[&entries[..2], &entries[2..]]).expect("element");
        let i = if ann { r.annihilator(&a, side) } else { r.principal(&a, side) };
        let v = codec::ideal(&r, &i);
        prop_assert_eq!(codec::parse_ideal(&r, side, &text_round_trip(&v)).expect("parses"), i);
    }

    #[test]
    fn residue_ideals(n in 2u64..60, v in 0u64..60, ann in any::<bool>()) {
        let r = Zn::new(n).expect("modulus");
        let a = v % n;
        let i = if ann { r.annihilator(&a, Side::Right) } else { r.principal(&a, Side::Right) };
        let j = codec::ideal(&r, &i);
        prop_assert_eq!(codec::parse_ideal(&r, Side::Right, &text_round_trip(&j)).expect("parses"), i);
    }

    #[test]
    fn job_specs(
        command in prop::sample::select(vec![Command::Compute, Command::Enumerate, Command::Prescribe, Command::Verify]),
        ring in ring_spec(),
        element in prop::option::of(prop::array::uniform4(0i64..5)),
        options in prop::collection::btree_map("[a-z_]{1,8}", prop_oneof![
            "[a-z0-9,]{0,6}".prop_map(Value::from),
            any::<u32>().prop_map(Value::from),
            any::<bool>().prop_map(Value::from),
        ], 0..4),
    ) {
        let spec = JobSpec {
            command,
            ring: Some(codec::ring_to_json(&ring)),
            element: element.map(|e| json!([[e[0].to_string(), e[1].to_string()], [e[2].to_string(), e[3].to_string()]])),
            options: options.into_iter().collect::<BTreeMap<_, _>>(),
        };
        let text = serde_json::to_string(&spec).expect("serializes");
        prop_assert_eq!(job::parse_job(&text).expect("parses"), spec);
    }

    #[test]
    fn inverse_reports(entries in prop::array::uniform4(0i64..5)) {
        let r = f5();
        let a = r.from_ints(&[&entries[..2], &entries[2..]]).expect("element");
        for rep in [drazin_inverse(&r, &a).expect("drazin"), moore_penrose_report(&r, &a).expect("mp")] {
            let v = serde_json::Value::Object(codec::inverse_report(&r, &rep));
            prop_assert_eq!(&text_round_trip(&v), &v);
            if let Some(x) = rep.result() {
                prop_assert_eq!(&codec::parse_elem(&r, &v["result"]).expect("parses"), x);
            }
            for p in v.get("projectors").and_then(Value::as_array).into_iter().flatten() {
                let side = if p["onto"]["side"] == "right" { Side::Right } else { Side::Left };
                let onto = codec::parse_ideal(&r, side, &p["onto"]).expect("parses");
                prop_assert_eq!(codec::ideal(&r, &onto), p["onto"].clone());
            }
        }
    }
}

#[test]
fn verification_reports_round_trip() {
    let r = Zn::new(6).expect("Z6");
    for id in ["T-1I-projectors", "L-orthogonality", "A-inner"] {
        let rep = ringinv_core::oracle::verify(&r, id, ringinv_core::oracle::Budget::cases(3)).expect("known id");
        let v = codec::verification_report(&rep);
        assert_eq!(text_round_trip(&v), v);
    }
}

#[test]
fn shorthand_and_json_specs_agree() {
    for (short, long) in [
        ("zn:6", json!({"kind": "modular", "modulus": 6})),
        ("m2f2", json!({"kind": "matrix", "size": 2, "scalars": {"kind": "fp", "p": 2}, "involution": "transpose"})),
        ("m2q", json!({"kind": "matrix", "size": 2, "scalars": {"kind": "q"}, "involution": "transpose"})),
    ] {
        assert_eq!(codec::parse_ring(short).expect("shorthand"), codec::ring_from_json(&long).expect("json"));
        assert_eq!(codec::ring_to_json(&codec::parse_ring(short).expect("shorthand")), long);
    }
    assert!(codec::parse_ring("m2f4").is_err());
    assert!(codec::parse_ring("zn:0").is_err());
}

#[test]
fn scalars_accept_integers_and_reject_floats() {
    let r = q2();
    let x = codec::parse_elem(&r, &json!([[1, "1/2"], [0, -3]])).expect("integers accepted");
    assert_eq!(codec::elem(&r, &x), json!([["1", "1/2"], ["0", "-3"]]));
    assert!(codec::parse_elem(&r, &json!([[0.5, 0], [0, 0]])).is_err());
    assert!(r.size().is_none());
}
