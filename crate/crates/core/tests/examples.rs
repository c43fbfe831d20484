//! The documented per-module examples. Hand-derived values are checked
//! against brute force where the ring is finite.

use std::collections::BTreeSet;

use ringinv_core::field::{PrimeField, Rationals};
use ringinv_core::geninv::{
    classify_projector_relations, core_inverse, drazin, dual_core_inverse, enumerate_inverse_set, group_inverse,
    inner_inverse, moore_penrose, satisfies, EquationSet,
};
use ringinv_core::ideal::{complement, direct_sum, ideal_subset, orthogonal, IdealLattice, Shorthand, Side};
use ringinv_core::linalg::Mat;
use ringinv_core::oracle::{brute_force_set, verify, Budget, Status};
use ringinv_core::prescribed::{
    mitsch_extremes, mitsch_leq, mitsch_leq_brute, one_inverse_family, one_inverse_solution_set, prescribed_inverse, prescribed_set, Mode,
    reflexive_characterize, IdealConstraints,
};
use ringinv_core::projector::{equals_rho, projector_from_idempotent, projector_from_sum, projector_orthogonality};
use ringinv_core::ring::{classify_element, involute, Involution, MatrixRing, Ring, Zn};
use ringinv_core::special::{
    bc_inverse, bott_duffin, e_core, f_dual_core, is_w_core, is_weighted_mp, pq_inverse, star_class_set, w_core,
    weighted_mp, BcFlavor, PqFlavor, StarClass,
};
use ringinv_core::Error;

fn z6() -> Zn {
    Zn::new(6).unwrap()
}

fn q2() -> MatrixRing<Rationals> {
    MatrixRing::new(Rationals, 2, Involution::Transpose).unwrap()
}

fn fp2(p: u64) -> MatrixRing<PrimeField> {
    MatrixRing::new(PrimeField::new(p).unwrap(), 2, Involution::Transpose).unwrap()
}

fn q(r: &MatrixRing<Rationals>, rows: [[&str; 2]; 2]) -> Mat<<Rationals as ringinv_core::field::Field>::Scalar> {
    r.from_strs(&[&rows[0], &rows[1]]).unwrap()
}

fn a3(r: &MatrixRing<Rationals>) -> Mat<<Rationals as ringinv_core::field::Field>::Scalar> {
    q(r, [["2", "-2"], ["0", "0"]])
}

fn set<T: Ord + Clone>(xs: &[T]) -> BTreeSet<T> {
    xs.iter().cloned().collect()
}

mod ring_core {
    use super::*;

    #[test]
    fn arithmetic() {
        assert_eq!(z6().mul(&2, &5), 4);
        let r = q2();
        assert_eq!(r.mul(&a3(&r), &q(&r, [["1/4", "0"], ["-1/4", "0"]])), r.unit(1, 1));
        for a in z6().elements().unwrap() {
            assert_eq!(z6().mul(&a, &1), a);
        }
    }

    #[test]
    fn involution() {
        let r = q2();
        assert_eq!(involute(&r, &a3(&r)).unwrap(), q(&r, [["2", "0"], ["-2", "0"]]));
        let f2 = fp2(2);
        assert_eq!(involute(&f2, &f2.unit(1, 2)).unwrap(), f2.unit(2, 1));
        assert_eq!(involute(&z6(), &1), Err(Error::UnsupportedInvolution));
        let f3 = fp2(3);
        let els = f3.elements().unwrap();
        for a in &els {
            assert_eq!(f3.star(&f3.star(a).unwrap()).unwrap(), *a);
            for b in &els {
                assert_eq!(f3.star(&f3.mul(a, b)).unwrap(), f3.mul(&f3.star(b).unwrap(), &f3.star(a).unwrap()));
            }
        }
    }

    #[test]
    fn classification() {
        let r = q2();
        let e11 = classify_element(&r, &r.unit(1, 1));
        assert!(e11.idempotent && e11.symmetric == Some(true) && e11.projection == Some(true) && !e11.invertible());
        let four = classify_element(&z6(), &4);
        assert!(four.idempotent && !four.invertible());
        let five = classify_element(&z6(), &5);
        assert!(!five.idempotent && five.inverse == Some(5));
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(z6().elements().unwrap().len(), 6);
        assert_eq!(fp2(2).elements().unwrap().len(), 16);
        assert_eq!(fp2(5).elements().unwrap().len(), 625);
        assert_eq!(q2().elements().unwrap_err(), Error::NotEnumerable);
    }
}

mod ideal_lattice {
    use super::*;

    #[test]
    fn principal_and_annihilator() {
        let z = z6();
        assert_eq!(z.ideal_elements(&z.principal(&2, Side::Right)).unwrap(), vec![0, 2, 4]);
        assert_eq!(z.ideal_elements(&z.annihilator(&2, Side::Right)).unwrap(), vec![0, 3]);
        assert_eq!(z.ideal_elements(&z.principal(&0, Side::Right)).unwrap(), vec![0]);
        assert_eq!(z.ideal_elements(&z.annihilator(&1, Side::Right)).unwrap(), vec![0]);

        let f2 = fp2(2);
        let e12 = f2.unit(1, 2);
        let row_zero: Vec<_> = f2.elements().unwrap().into_iter().filter(|x| *x.get(1, 0) == 0 && *x.get(1, 1) == 0).collect();
        assert_eq!(row_zero.len(), 4);
        let pr = f2.principal(&e12, Side::Right);
        assert_eq!(set(&f2.ideal_elements(&pr).unwrap()), set(&row_zero));
        assert_eq!(f2.annihilator(&e12, Side::Right), pr);
    }

    #[test]
    fn subset() {
        let z = z6();
        let (i2, i3) = (z.principal(&2, Side::Right), z.principal(&3, Side::Right));
        assert!(ideal_subset(&z, &i3, &i3).unwrap());
        assert!(!ideal_subset(&z, &i2, &i3).unwrap());
        let r = q2();
        assert!(ideal_subset(&r, &r.principal(&a3(&r), Side::Right), &r.whole_ideal(Side::Right)).unwrap());
        assert_eq!(
            ideal_subset(&z, &i2, &z.principal(&2, Side::Left)).is_err(),
            z.principal(&2, Side::Left) != i2
        );
    }

    #[test]
    fn direct_sums() {
        let z = z6();
        let w = direct_sum(&z, &z.principal(&2, Side::Right), &z.principal(&3, Side::Right)).unwrap().unwrap();
        assert_eq!(w.decompose(&z, &1), (4, 3));
        let f2 = fp2(2);
        let row_zero = f2.principal(&f2.unit(1, 2), Side::Right);
        assert!(direct_sum(&f2, &row_zero, &row_zero).unwrap().is_none());
        let whole = direct_sum(&f2, &f2.whole_ideal(Side::Right), &f2.zero_ideal(Side::Right)).unwrap().unwrap();
        for x in f2.elements().unwrap() {
            assert_eq!(whole.decompose(&f2, &x), (x.clone(), f2.zero()));
        }
    }

    #[test]
    fn complements() {
        let r = q2();
        let s = r.principal(&r.unit(1, 1), Side::Right);
        assert_eq!(complement(&r, &s), Some(r.principal(&r.unit(2, 2), Side::Right)));
        let z = z6();
        assert_eq!(complement(&z, &z.principal(&2, Side::Right)), Some(z.principal(&3, Side::Right)));
        assert_eq!(complement(&z, &z.zero_ideal(Side::Right)), Some(z.whole_ideal(Side::Right)));
    }

    #[test]
    fn orthogonality() {
        let f2 = fp2(2);
        let e11 = f2.unit(1, 1);
        assert!(orthogonal(&f2, &f2.principal(&e11, Side::Right), &f2.annihilator(&e11, Side::Right), Side::Right).unwrap());
        let r = q2();
        let a = a3(&r);
        let s = r.star(&a).unwrap();
        assert!(orthogonal(&r, &r.principal(&a, Side::Right), &r.annihilator(&s, Side::Right), Side::Right).unwrap());
        for x in f2.elements().unwrap() {
            for side in [Side::Right, Side::Left] {
                assert!(orthogonal(&f2, &f2.zero_ideal(Side::Right), &f2.principal(&x, Side::Right), side).unwrap());
            }
        }
        assert_eq!(orthogonal(&z6(), &z6().zero_ideal(Side::Right), &z6().zero_ideal(Side::Right), Side::Right), Err(Error::UnsupportedInvolution));
    }
}

mod projector {
    use super::*;

    #[test]
    fn from_sums() {
        let z = z6();
        let (s, t) = (z.principal(&2, Side::Right), z.principal(&3, Side::Right));
        let p = projector_from_sum(&z, &s, &t).unwrap().unwrap();
        assert_eq!(*p.unit_image(), 4);
        assert_eq!(p.apply(&z, &1), 4);
        for r in z.elements().unwrap() {
            if z.ideal_contains(&s, &r) {
                assert_eq!(p.apply(&z, &r), r);
            }
            if z.ideal_contains(&t, &r) {
                assert_eq!(p.apply(&z, &r), 0);
            }
            assert_eq!(p.apply(&z, &p.apply(&z, &r)), p.apply(&z, &r));
        }
        let r = q2();
        let s = r.principal(&a3(&r), Side::Right);
        let t = complement(&r, &s).unwrap();
        assert_eq!(*projector_from_sum(&r, &s, &t).unwrap().unwrap().unit_image(), r.unit(1, 1));
        let id = projector_from_sum(&r, &r.whole_ideal(Side::Right), &r.zero_ideal(Side::Right)).unwrap().unwrap();
        assert_eq!(*id.unit_image(), r.one());
    }

    #[test]
    fn from_idempotents() {
        let z = z6();
        let p = projector_from_idempotent(&z, &4, Side::Right).unwrap();
        assert_eq!(z.ideal_elements(p.onto()).unwrap(), vec![0, 2, 4]);
        assert_eq!(z.ideal_elements(p.along()).unwrap(), vec![0, 3]);
        let r = q2();
        let p = projector_from_idempotent(&r, &r.unit(1, 1), Side::Right).unwrap();
        assert_eq!(*p.onto(), r.principal(&r.unit(1, 1), Side::Right));
        assert_eq!(*p.along(), r.principal(&r.unit(2, 2), Side::Right));
        let id = projector_from_idempotent(&r, &r.one(), Side::Right).unwrap();
        assert_eq!(*id.onto(), r.whole_ideal(Side::Right));
    }

    #[test]
    fn orthogonality_flags() {
        let r = q2();
        let a = a3(&r);
        let aa = r.mul(&a, &moore_penrose(&r, &a).unwrap().unwrap());
        assert_eq!(aa, r.unit(1, 1));
        let p = projector_from_idempotent(&r, &aa, Side::Right).unwrap();
        assert!(projector_orthogonality(&r, &p).unwrap().right_orthogonal);
        let f2 = fp2(2);
        let e12 = f2.unit(1, 2);
        assert!(projector_from_sum(&f2, &f2.principal(&e12, Side::Right), &f2.annihilator(&e12, Side::Right)).unwrap().is_none());
        let e11 = f2.unit(1, 1);
        let p = projector_from_sum(&f2, &f2.principal(&e11, Side::Right), &f2.annihilator(&e11, Side::Right)).unwrap().unwrap();
        assert!(projector_orthogonality(&f2, &p).unwrap().right_orthogonal);
        let id = projector_from_idempotent(&f2, &f2.one(), Side::Left).unwrap();
        let o = projector_orthogonality(&f2, &id).unwrap();
        assert!(o.right_orthogonal && o.left_orthogonal);
    }
}

mod geninv {
    use super::*;

    #[test]
    fn equation_checks() {
        let r = q2();
        let a = a3(&r);
        assert!(satisfies(&r, &a, &q(&r, [["1/4", "0"], ["-1/4", "0"]]), &EquationSet::of(&[1, 2, 3, 4])).unwrap());
        assert!(satisfies(&z6(), &2, &5, &EquationSet::of(&[1])).unwrap());
        assert!(!satisfies(&z6(), &2, &5, &EquationSet::of(&[1, 2])).unwrap());
        for a in z6().elements().unwrap() {
            assert!(satisfies(&z6(), &a, &0, &EquationSet::of(&[2])).unwrap());
        }
    }

    #[test]
    fn inverse_sets() {
        let f5 = fp2(5);
        let a = f5.unit(1, 2);
        let ones = enumerate_inverse_set(&f5, &a, &EquationSet::of(&[1])).unwrap();
        let want: Vec<_> = f5.elements().unwrap().into_iter().filter(|x| *x.get(1, 0) == 1).collect();
        assert_eq!(set(&ones), set(&want));
        let refl = enumerate_inverse_set(&f5, &a, &EquationSet::of(&[1, 2])).unwrap();
        let want: Vec<_> = want.into_iter().filter(|x| *x.get(0, 1) == (x.get(0, 0) * x.get(1, 1)) % 5).collect();
        assert_eq!((refl.len(), set(&refl)), (25, set(&want)));
        assert_eq!(enumerate_inverse_set(&z6(), &2, &EquationSet::of(&[1])).unwrap(), vec![2, 5]);
    }

    #[test]
    fn inner_inverse_contract() {
        let r = q2();
        for a in [a3(&r), r.one(), r.zero()] {
            let x = inner_inverse(&r, &a).unwrap().result().cloned().unwrap();
            assert_eq!(r.mul3(&a, &x, &a), a);
        }
        assert_eq!(inner_inverse(&r, &r.one()).unwrap().result(), Some(&r.one()));
    }

    #[test]
    fn group_and_drazin() {
        let r = q2();
        assert_eq!(drazin(&r, &a3(&r)).unwrap(), Some((q(&r, [["1/2", "-1/2"], ["0", "0"]]), 1)));
        assert_eq!(drazin(&r, &r.unit(1, 2)).unwrap(), Some((r.zero(), 2)));
        assert_eq!(group_inverse(&z6(), &3).unwrap().result(), Some(&3));
    }

    #[test]
    fn moore_penrose_and_cores() {
        let r = q2();
        let a = a3(&r);
        assert_eq!(moore_penrose(&r, &a).unwrap(), Some(q(&r, [["1/4", "0"], ["-1/4", "0"]])));
        assert_eq!(core_inverse(&r, &a).unwrap(), Some(q(&r, [["1/2", "0"], ["0", "0"]])));
        assert_eq!(dual_core_inverse(&r, &a).unwrap(), Some(q(&r, [["1/4", "-1/4"], ["-1/4", "1/4"]])));
        let f2 = fp2(2);
        let b = f2.from_ints(&[&[1, 1], &[0, 0]]).unwrap();
        assert_eq!(moore_penrose(&f2, &b).unwrap(), None);
        for ring_one in [r.one()] {
            assert_eq!(moore_penrose(&r, &ring_one).unwrap(), Some(r.one()));
            assert_eq!(core_inverse(&r, &ring_one).unwrap(), Some(r.one()));
            assert_eq!(dual_core_inverse(&r, &ring_one).unwrap(), Some(r.one()));
        }
    }

    #[test]
    fn projector_relations() {
        let r = q2();
        let a = a3(&r);
        let sharp = group_inverse(&r, &a).unwrap().result().cloned().unwrap();
        let rel = classify_projector_relations(&r, &a, &sharp).unwrap();
        assert!(rel.consistent());
        assert!(rel.checks.iter().any(|c| c.member && c.class.contains('5')));
        let (ax, xa) = (r.mul(&a, &sharp), r.mul(&sharp, &a));
        assert!(equals_rho(&r, &ax, &r.rp(&a), &r.rann(&a)) && ax == xa);

        let dagger = moore_penrose(&r, &a).unwrap().unwrap();
        let s = r.star(&a).unwrap();
        assert!(equals_rho(&r, &r.mul(&a, &dagger), &r.rp(&a), &r.rann(&s)));
        assert!(equals_rho(&r, &r.mul(&dagger, &a), &r.rp(&s), &r.rann(&a)));

        let f2 = fp2(2);
        let e12 = f2.unit(1, 2);
        for x in f2.elements().unwrap() {
            let in_1_or_2 = satisfies(&f2, &e12, &x, &EquationSet::of(&[1])).unwrap()
                || satisfies(&f2, &e12, &x, &EquationSet::of(&[2])).unwrap();
            if !in_1_or_2 {
                let rel = classify_projector_relations(&f2, &e12, &x).unwrap();
                assert!(rel.consistent());
                assert!(rel.checks.iter().all(|c| !c.member));
            }
        }
    }
}

mod prescribed {
    use super::*;

    fn example_ideals(r: &MatrixRing<PrimeField>) -> (<MatrixRing<PrimeField> as IdealLattice>::Ideal, <MatrixRing<PrimeField> as IdealLattice>::Ideal) {
        let s: Vec<_> = r.elements().unwrap().into_iter().filter(|x| *x.get(0, 0) == 0 && *x.get(0, 1) == 0).collect();
        let sl: Vec<_> = r.elements().unwrap().into_iter().filter(|x| *x.get(0, 1) == 0 && *x.get(1, 1) == 0).collect();
        (r.generated(Side::Right, &s), r.generated(Side::Left, &sl))
    }

    #[test]
    fn families() {
        let f5 = fp2(5);
        let a = f5.unit(1, 2);
        let (s, _) = example_ideals(&f5);
        let fam = one_inverse_family(&f5, &a, &IdealConstraints::right(s.clone(), s.clone())).unwrap().unwrap();
        let members = fam.members.clone().unwrap();
        let want: Vec<_> = (0..5).map(|c| f5.from_ints(&[&[0, c], &[1, 0]]).unwrap()).collect();
        assert_eq!(set(&members), set(&want));
        let fam = one_inverse_family(&f5, &a, &IdealConstraints::only_s(s.clone())).unwrap().unwrap();
        assert_eq!(fam.members.unwrap().len(), 25);

        let fixed = one_inverse_solution_set(&f5, &a, &IdealConstraints::right(s.clone(), s.clone()), &f5.unit(2, 1)).unwrap();
        assert_eq!(set(&fixed), set(&want));

        let z = z6();
        let c = IdealConstraints::right(z.principal(&2, Side::Right), z.principal(&3, Side::Right));
        // (1 - 2*2) y (1 - 2*2) = 3y ranges over {0, 3}, so the set is {2, 5}.
        let brute = prescribed_set(&z, &2, &c, Mode::Inner).unwrap();
        assert_eq!(brute, vec![2, 5]);
        assert_eq!(one_inverse_solution_set(&z, &2, &c, &2).unwrap(), brute);

        let unit = IdealConstraints::right(z.whole_ideal(Side::Right), z.zero_ideal(Side::Right));
        assert_eq!(one_inverse_family(&z, &5, &unit).unwrap().unwrap().members, Some(vec![5]));
        assert_eq!(one_inverse_solution_set(&z, &5, &unit, &5).unwrap(), vec![5]);
    }

    #[test]
    fn unique_inverses() {
        let f5 = fp2(5);
        let a = f5.unit(1, 2);
        let (s, sl) = example_ideals(&f5);
        for c in [
            IdealConstraints::right(s.clone(), s.clone()),
            IdealConstraints::left(sl.clone(), sl.clone()),
            IdealConstraints::principals(s.clone(), sl.clone()),
            IdealConstraints::annihilators(s.clone(), sl.clone()),
        ] {
            for reflexive in [false, true] {
                assert_eq!(prescribed_inverse(&f5, &a, &c, reflexive).unwrap(), Ok(f5.unit(2, 1)));
            }
        }
        let z = z6();
        let unit = IdealConstraints::right(z.whole_ideal(Side::Right), z.zero_ideal(Side::Right));
        for reflexive in [false, true] {
            assert_eq!(prescribed_inverse(&z, &5, &unit, reflexive).unwrap(), Ok(5));
        }
    }

    #[test]
    fn reflexive_clauses() {
        let f5 = fp2(5);
        let a = f5.unit(1, 2);
        let (s, _) = example_ideals(&f5);
        let c = IdealConstraints::right(s.clone(), s.clone());
        let yes = reflexive_characterize(&f5, &a, &f5.unit(2, 1), &c).unwrap();
        assert!(yes.holds() && yes.consistent());
        let no = reflexive_characterize(&f5, &a, &f5.add(&f5.unit(2, 1), &f5.unit(1, 2)), &c).unwrap();
        assert!(!no.holds() && no.consistent());
        let z = z6();
        let unit = IdealConstraints::right(z.whole_ideal(Side::Right), z.zero_ideal(Side::Right));
        let one = reflexive_characterize(&z, &1, &1, &unit).unwrap();
        assert!(one.holds() && one.consistent());
    }

    #[test]
    fn mitsch_order() {
        let f2 = fp2(2);
        let els = f2.elements().unwrap();
        for y in &els {
            assert!(mitsch_leq(&f2, y, y).unwrap());
            assert!(mitsch_leq(&f2, &f2.zero(), y).unwrap());
        }
        let (y, z) = (f2.unit(2, 1), f2.add(&f2.unit(2, 1), &f2.unit(2, 2)));
        // Golden: any v with v(z - y) = 0 has zero second column, so vy = 0 != y.
        assert!(!mitsch_leq(&f2, &y, &z).unwrap());
        assert_eq!(mitsch_leq(&f2, &y, &z).unwrap(), mitsch_leq_brute(&f2, &y, &z).unwrap());
    }

    #[test]
    fn mitsch_extremes_examples() {
        let f5 = fp2(5);
        let a = f5.unit(1, 2);
        let (s, sl) = example_ideals(&f5);
        let rep = mitsch_extremes(&f5, &a, &IdealConstraints::principals(s, sl)).unwrap();
        assert_eq!(rep.intersection, vec![f5.unit(2, 1)]);
        let z = z6();
        let rep = mitsch_extremes(&z, &2, &IdealConstraints::principals(z.principal(&2, Side::Right), z.principal(&2, Side::Left))).unwrap();
        assert_eq!(rep.intersection, vec![2]);
        let rep = mitsch_extremes(&z, &5, &IdealConstraints::principals(z.whole_ideal(Side::Right), z.whole_ideal(Side::Left))).unwrap();
        assert_eq!(rep.prescribed, Some(5));
    }
}

mod special {
    use super::*;

    #[test]
    fn star_classes() {
        let r = q2();
        let a = a3(&r);
        for (c, d) in [("0", "0"), ("3", "3"), ("-7/2", "-7/2")] {
            let x = q(&r, [["1/4", c], ["-1/4", d]]);
            assert!(satisfies(&r, &a, &x, &EquationSet::of(&[1, 3, 4])).unwrap());
        }
        assert!(!satisfies(&r, &a, &q(&r, [["1/4", "1"], ["-1/4", "0"]]), &EquationSet::of(&[1, 3, 4])).unwrap());

        let f2 = fp2(2);
        let e12 = f2.unit(1, 2);
        // Golden: x21 = 1 from (1), x22 = 0 from the symmetry of ax.
        let want: Vec<_> = f2.elements().unwrap().into_iter().filter(|x| *x.get(1, 0) == 1 && *x.get(1, 1) == 0).collect();
        let got = star_class_set(&f2, &e12, StarClass::C13).unwrap();
        assert_eq!((got.len(), set(&got)), (4, set(&want)));
        for cls in StarClass::ALL {
            assert_eq!(star_class_set(&f2, &f2.one(), cls).unwrap(), vec![f2.one()]);
        }
    }

    #[test]
    fn weighted() {
        let r = q2();
        let a = a3(&r);
        let one = r.one();
        assert_eq!(weighted_mp(&r, &a, &one, &one).unwrap(), moore_penrose(&r, &a).unwrap());
        let e = q(&r, [["2", "0"], ["0", "1"]]);
        let x = weighted_mp(&r, &a, &e, &e).unwrap().unwrap();
        assert!(is_weighted_mp(&r, &a, &x, &e, &e).unwrap());
        assert!(satisfies(&r, &a, &x, &EquationSet::of(&[1, 2])).unwrap());
        let ex = r.mul(&e, &r.mul(&a, &x));
        assert_eq!(r.star(&ex).unwrap(), ex);
        let u = q(&r, [["1", "2"], ["0", "3"]]);
        assert_eq!(weighted_mp(&r, &u, &e, &one).unwrap(), r.inverse(&u));

        assert_eq!(e_core(&r, &a, &one).unwrap(), Some(q(&r, [["1/2", "0"], ["0", "0"]])));
        assert_eq!(f_dual_core(&r, &a, &one).unwrap(), Some(q(&r, [["1/4", "-1/4"], ["-1/4", "1/4"]])));
        assert_eq!(e_core(&r, &r.zero(), &e).unwrap(), Some(r.zero()));
        assert_eq!(w_core(&r, &a, &one).unwrap(), Ok(q(&r, [["1/2", "0"], ["0", "0"]])));
        assert_eq!(w_core(&r, &r.zero(), &e).unwrap(), Ok(r.zero()));
    }

    #[test]
    fn w_core_over_f2() {
        let f2 = fp2(2);
        let (a, w) = (f2.unit(1, 2), f2.unit(2, 1));
        assert_eq!(f2.mul(&a, &w), f2.unit(1, 1));
        let brute = brute_force_set(&f2, |x| is_w_core(&f2, &a, x, &w)).unwrap();
        assert_eq!(brute, vec![f2.unit(1, 1)]);
        assert_eq!(w_core(&f2, &a, &w).unwrap(), Ok(f2.unit(1, 1)));
    }

    #[test]
    fn bc_inverses() {
        let r = q2();
        let a = a3(&r);
        let sharp = q(&r, [["1/2", "-1/2"], ["0", "0"]]);
        assert_eq!(bc_inverse(&r, &a, &a, &a, BcFlavor::Full).unwrap().result, Some(sharp));
        let f5 = fp2(5);
        let (e12, e21) = (f5.unit(1, 2), f5.unit(2, 1));
        assert_eq!(f5.mul3(&e21, &e12, &e21), e21);
        assert_eq!(bc_inverse(&f5, &e12, &e21, &e21, BcFlavor::Full).unwrap().result, Some(e21.clone()));
        let u = q(&r, [["1", "2"], ["0", "3"]]);
        for flavor in BcFlavor::ALL {
            assert_eq!(bc_inverse(&r, &u, &r.one(), &r.one(), flavor).unwrap().result, r.inverse(&u));
        }
    }

    #[test]
    fn pq_inverses() {
        let r = q2();
        let a = a3(&r);
        let one = r.one();
        let dagger = moore_penrose(&r, &a).unwrap().unwrap();
        let (p, qq) = (r.mul(&dagger, &a), r.sub(&one, &r.mul(&a, &dagger)));
        assert_eq!(p, q(&r, [["1/2", "-1/2"], ["-1/2", "1/2"]]));
        assert_eq!(qq, r.unit(2, 2));
        let x = pq_inverse(&r, &a, &p, &qq, PqFlavor::DjordjevicWei).unwrap().result.unwrap();
        assert_eq!(x, dagger);
        assert!(satisfies(&r, &a, &x, &EquationSet::of(&[1, 2])).unwrap());

        let sharp = q(&r, [["1/2", "-1/2"], ["0", "0"]]);
        let p = r.mul(&a, &sharp);
        let x = pq_inverse(&r, &a, &p, &r.sub(&one, &p), PqFlavor::DjordjevicWei).unwrap().result;
        assert_eq!(x, Some(sharp));

        let u = q(&r, [["1", "2"], ["0", "3"]]);
        for flavor in [PqFlavor::DjordjevicWei, PqFlavor::ImageKernel, PqFlavor::BottDuffin] {
            let rep = pq_inverse(&r, &u, &one, &r.zero(), flavor).unwrap();
            assert_eq!(rep.result, r.inverse(&u), "{flavor:?}");
        }
        assert_eq!(bott_duffin(&r, &u, &one).unwrap(), r.inverse(&u));
    }
}

mod oracle {
    use super::*;

    #[test]
    fn documented_runs() {
        let rep = verify(&z6(), "T-1I-projectors", Budget::UNLIMITED).unwrap();
        assert_eq!((rep.status, rep.cases_checked), (Status::Pass, 36));
        let rep = verify(&fp2(2), "T-1I-projectors", Budget::UNLIMITED).unwrap();
        assert_eq!((rep.status, rep.cases_checked), (Status::Pass, 256));
        let rep = verify(&z6(), "T-invertible-lemma", Budget::UNLIMITED).unwrap();
        assert_eq!((rep.status, rep.cases_checked), (Status::Pass, 6));
    }

    #[test]
    fn brute_force_sets() {
        let z = z6();
        assert_eq!(brute_force_set(&z, |x| Ok(z.mul3(&2, x, &2) == 2)).unwrap(), vec![2, 5]);
        let f5 = fp2(5);
        let a = f5.unit(1, 2);
        let got = brute_force_set(&f5, |x| satisfies(&f5, &a, x, &EquationSet::of(&[1, 2]))).unwrap();
        assert_eq!(got.len(), 25);
        assert!(brute_force_set(&z, |_| Ok(false)).unwrap().is_empty());
        assert_eq!(brute_force_set(&q2(), |_| Ok(true)).unwrap_err(), Error::NotEnumerable);
    }

    #[test]
    fn counterexamples_are_deterministic() {
        let z8 = Zn::new(8).unwrap();
        let first = verify(&z8, "T-1I-projectors", Budget::cases(7)).unwrap();
        let second = verify(&z8, "T-1I-projectors", Budget::cases(7)).unwrap();
        assert_eq!(first, second);
        assert_eq!(first.status, Status::Incomplete);
    }
}
