use maxkernel::codes::{d_closed_form, DClosedForm};
use maxkernel::gf::{Element, Field};
use maxkernel::trinomial::{
    classify_brute_force, d3_characterize, d4_characterize, enumerate_max_kernel, main_system_check, EnumerateOptions,
    TrinomialInstance,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn f2(n: usize) -> Field {
    Field::new(2, 1, n, 1).unwrap()
}

#[test]
fn d3_characterization_is_exact_for_small_fields() {
    for (p, n) in [(2u64, 4usize), (2, 5), (2, 6), (2, 7), (3, 4), (3, 5), (5, 4)] {
        let f = Field::new(p, 1, n, 1).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                let truth = TrinomialInstance::new(3, a, b).has_max_kernel(&f);
                let got = d3_characterize(&f, a, b).unwrap();
                assert_eq!(got.is_max(), truth, "p={p} n={n} a={} b={}", a.to_hex(), b.to_hex());
            }
        }
    }
}

#[test]
fn d3_at_n4_over_f4_matches_scan() {
    // every hit of the scan, plus random pairs
    let f = Field::new(2, 2, 4, 1).unwrap();
    let hits = enumerate_max_kernel(&f, 3, &EnumerateOptions::default()).unwrap();
    for h in &hits {
        assert!(d3_characterize(&f, h.a, h.b).unwrap().is_max());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..2000 {
        let a = f.element(rng.gen_range(0..f.order())).unwrap();
        let b = f.element(rng.gen_range(0..f.order())).unwrap();
        let truth = TrinomialInstance::new(3, a, b).has_max_kernel(&f);
        assert_eq!(d3_characterize(&f, a, b).unwrap().is_max(), truth);
    }
}

/// Max-kernel counts for d = 4 against the closed-form D / (q^n − 1), and the
/// characterization on every hit and on random pairs.
#[test]
fn d4_scan_matches_closed_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    for n in 5..=10 {
        let f = f2(n);
        let hits = enumerate_max_kernel(&f, 4, &EnumerateOptions::default()).unwrap();
        let count = hits.len() as u128 * (f.order() - 1);
        match d_closed_form(&f, 4) {
            DClosedForm::Exact(v) => assert_eq!(count, v, "n = {n}"),
            other => panic!("n = {n}: expected an exact value, got {other:?}"),
        }
        for h in &hits {
            assert!(d4_characterize(&f, h.a, h.b).unwrap().is_max(), "n = {n}");
        }
        for _ in 0..500 {
            let a = f.element(rng.gen_range(0..f.order())).unwrap();
            let b = f.element(rng.gen_range(0..f.order())).unwrap();
            let inst = TrinomialInstance::new(4, a, b);
            assert_eq!(d4_characterize(&f, a, b).unwrap().is_max(), inst.has_max_kernel(&f), "n = {n}");
        }
    }
}

#[test]
fn coefficient_ladder_matches_brute_force() {
    for (p, n, d) in [(2u64, 7usize, 3usize), (2, 8, 3), (3, 7, 3)] {
        let f = Field::new(p, 1, n, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        let hits = enumerate_max_kernel(&f, d, &EnumerateOptions::default()).unwrap();
        let mut pairs: Vec<(Element, Element)> = hits.iter().map(|i| (i.a, i.b)).collect();
        pairs.extend((0..1000).map(|_| {
            (f.element(rng.gen_range(0..f.order())).unwrap(), f.element(rng.gen_range(0..f.order())).unwrap())
        }));
        for (a, b) in pairs {
            let inst = TrinomialInstance::new(d, a, b);
            let got = main_system_check(&f, &inst).unwrap();
            assert_eq!(got.is_max(), classify_brute_force(&f, &inst).is_max(), "p={p} n={n}");
        }
    }
}

#[test]
fn n15_even_family_is_detected_by_ladder() {
    let f = f2(15);
    let a = f.nonzero_elements().find(|&x| f.norm(x) == Element::ONE && x != Element::ONE).unwrap();
    let inst = maxkernel::trinomial::family_even(&f, 4, a).unwrap();
    assert!(main_system_check(&f, &inst).unwrap().is_max());
    assert!(d4_characterize(&f, inst.a, inst.b).unwrap().is_max());
    let off = TrinomialInstance::new(4, a, f.add(inst.b, Element::ONE));
    assert!(!main_system_check(&f, &off).unwrap().is_max());
    assert!(!d4_characterize(&f, off.a, off.b).unwrap().is_max());
}
