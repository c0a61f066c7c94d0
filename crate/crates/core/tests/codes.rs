use maxkernel::codes::{
    build_orbit_code, d_closed_form, gap, quasi_subfield_check, subspace_polynomial, weight_census, DClosedForm,
    OrbitOptions, Subspace,
};
use maxkernel::gf::{Element, Field};
use maxkernel::linpoly::{kernel_basis, SigmaPoly};
use maxkernel::parallel::Exec;

#[test]
fn census_agrees_with_closed_forms_for_d3() {
    for n in 4..=8 {
        let f = Field::new(2, 1, n, 1).unwrap();
        let c = weight_census(&f, 3, u128::MAX, Exec::Parallel).unwrap();
        assert_eq!(c.total(), (1u128 << (3 * n)) - 1);
        assert!(c.min_weight().unwrap() >= n - 3);
        let s = c.summary(&f);
        assert_eq!(s.agree, Some(true), "n = {n}: {s:?}");
    }
    let c7 = weight_census(&Field::new(2, 1, 7, 1).unwrap(), 3, u128::MAX, Exec::Parallel).unwrap();
    assert_eq!(c7.min_weight_count(), 16129);
}

#[test]
fn census_in_odd_characteristic() {
    for (n, d) in [(4usize, 3usize), (5, 3), (4, 2)] {
        let f = Field::new(3, 1, n, 1).unwrap();
        let c = weight_census(&f, d, u128::MAX, Exec::Parallel).unwrap();
        assert_eq!(c.total(), 3u128.pow(3 * n as u32) - 1);
        if let DClosedForm::Exact(v) = d_closed_form(&f, d) {
            assert_eq!(c.min_weight_count(), v, "n = {n}, d = {d}");
        }
    }
}

#[test]
fn census_output_is_independent_of_execution() {
    let f = Field::new(2, 1, 6, 1).unwrap();
    let a = weight_census(&f, 4, u128::MAX, Exec::Sequential).unwrap();
    let b = weight_census(&f, 4, u128::MAX, Exec::Parallel).unwrap();
    assert_eq!(a, b);
}

#[test]
fn kernel_of_n7_trinomial_recovers_its_subspace_polynomial() {
    let f = Field::new(2, 1, 7, 1).unwrap();
    for a in f.nonzero_elements().step_by(17) {
        let b = f.pow(a, 19);
        let l = SigmaPoly::trinomial(&f, a, b, 3);
        let v = Subspace::from_fp_vectors(&f, &kernel_basis(&f, &l)).unwrap();
        assert_eq!(v.dim(), 3);
        let p = subspace_polynomial(&f, &v).unwrap();
        assert_eq!(p, l.normalize_monic(&f));
        assert_eq!(gap(&p), Ok(2));
    }
}

#[test]
fn orbit_of_subfield() {
    let f = Field::new(2, 1, 8, 1).unwrap();
    let v = Subspace::subfield(&f, 4).unwrap();
    let code = build_orbit_code(&f, &v, &OrbitOptions::default()).unwrap();
    assert_eq!((code.t, code.size, code.min_distance), (4, 17, Some(8)));
    let rec = serde_json::to_value(code.record()).unwrap();
    assert_eq!(rec["certified"], true);
    assert_eq!(rec["generator"].as_array().unwrap().len(), 4);
}

#[test]
fn orbit_code_n8_k3() {
    // kernel of a maximum-kernel trinomial at n = 8
    let f = Field::new(2, 1, 8, 1).unwrap();
    let hits = maxkernel::trinomial::enumerate_max_kernel(&f, 3, &Default::default()).unwrap();
    let inst = hits[0];
    let v = Subspace::from_fp_vectors(&f, &kernel_basis(&f, &inst.poly(&f))).unwrap();
    let code = build_orbit_code(&f, &v, &OrbitOptions::default()).unwrap();
    assert_eq!(code.size, 255);
    assert_eq!(code.min_distance, Some(4));
}

#[test]
fn quasi_subfield_family_member() {
    let f = Field::new(2, 1, 15, 1).unwrap();
    let a = f.nonzero_elements().find(|&x| f.norm(x) == Element::ONE).unwrap();
    let inst = maxkernel::trinomial::family_even(&f, 4, a).unwrap();
    let r = quasi_subfield_check(&f, &inst.poly(&f).normalize_monic(&f)).unwrap();
    assert!(r.quasi_subfield);
    let broken = SigmaPoly::trinomial(&f, a, f.add(inst.b, Element::ONE), 4).normalize_monic(&f);
    let r = quasi_subfield_check(&f, &broken).unwrap();
    assert!(!r.splits && r.degree_bound && !r.quasi_subfield);
}
