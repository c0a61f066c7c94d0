use maxkernel::codes::{
    cyclic_shift, gap_or_top, shifted_polynomial, subspace_distance, subspace_polynomial, Subspace,
};
use maxkernel::gf::{Element, Field, FrobExponent};
use maxkernel::linalg::rank;
use maxkernel::linpoly::{evaluate, kernel_dim, map_columns, SigmaPoly};
use maxkernel::parallel::Exec;
use maxkernel::trinomial::{enumerate_max_kernel, EnumerateOptions};
use proptest::prelude::*;

const FIELDS: [(u64, usize, usize, usize); 6] = [(2, 1, 7, 1), (2, 1, 8, 3), (3, 1, 5, 2), (3, 2, 3, 1), (5, 1, 4, 3), (2, 3, 3, 2)];

fn field_strategy() -> impl Strategy<Value = Field> {
    (0..FIELDS.len()).prop_map(|i| {
        let (p, h, n, s) = FIELDS[i];
        Field::new(p, h, n, s).unwrap()
    })
}

fn elem(f: &Field, raw: u128) -> Element {
    f.element(raw % f.order()).unwrap()
}

fn nonzero(f: &Field, raw: u128) -> Element {
    f.element(1 + raw % (f.order() - 1)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn field_axioms(f in field_strategy(), x in any::<u128>(), y in any::<u128>(), z in any::<u128>()) {
        let (x, y, z) = (elem(&f, x), elem(&f, y), elem(&f, z));
        prop_assert_eq!(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
        prop_assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
        prop_assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
        prop_assert_eq!(f.sub(f.add(x, y), y), x);
        if !y.is_zero() {
            prop_assert_eq!(f.mul(f.div(x, y).unwrap(), y), x);
        }
    }

    #[test]
    fn sigma_is_an_automorphism_of_order_n(f in field_strategy(), x in any::<u128>(), y in any::<u128>(), j in 0i64..20) {
        let (x, y) = (elem(&f, x), elem(&f, y));
        prop_assert_eq!(f.sigma(f.mul(x, y), j), f.mul(f.sigma(x, j), f.sigma(y, j)));
        prop_assert_eq!(f.sigma(f.add(x, y), j), f.add(f.sigma(x, j), f.sigma(y, j)));
        prop_assert_eq!(f.sigma(x, f.n() as i64), x);
        prop_assert_eq!(f.sigma(f.sigma(x, j), -j), x);
        let qs = f.q().pow(f.s() as u32);
        prop_assert_eq!(f.sigma(x, 1), f.pow(x, qs));
    }

    #[test]
    fn norm_is_multiplicative_into_fq(f in field_strategy(), x in any::<u128>(), y in any::<u128>()) {
        let (x, y) = (elem(&f, x), elem(&f, y));
        let nxy = f.norm(f.mul(x, y));
        prop_assert_eq!(nxy, f.mul(f.norm(x), f.norm(y)));
        prop_assert!(f.is_in_fq(nxy));
        // N(x) = Π σ^i(x)
        let prod = (0..f.n() as i64).fold(Element::ONE, |acc, i| f.mul(acc, f.sigma(x, i)));
        prop_assert_eq!(f.norm(x), prod);
    }

    #[test]
    fn frobenius_exponents_match_integer_powers(f in field_strategy(), x in any::<u128>(), start in 0u64..6, count in 0u64..4) {
        let x = nonzero(&f, x);
        let e = FrobExponent::geometric(start, 2, count) - FrobExponent::one();
        let direct = f.pow(x, f.exponent_eval(&e) % (f.order() - 1));
        prop_assert_eq!(f.power_by_exponent(x, &e).unwrap(), direct);
    }

    #[test]
    fn kernel_bounded_by_sdegree_and_h_divisible(f in field_strategy(), raw in proptest::collection::vec(any::<u128>(), 2..5)) {
        let mut c: Vec<Element> = raw.iter().map(|&r| elem(&f, r)).collect();
        let last = c.len() - 1;
        c[last] = nonzero(&f, raw[last]);
        let poly = SigmaPoly::new(c).unwrap();
        let nullity = f.m() - rank(&f, &map_columns(&f, &poly));
        prop_assert_eq!(nullity % f.h(), 0);
        prop_assert!(kernel_dim(&f, &poly) <= poly.sdegree());
    }

    #[test]
    fn subspace_distance_is_a_metric(gens in proptest::collection::vec(1u128..64, 1..10), split in 1usize..9) {
        let f = Field::new(2, 1, 6, 1).unwrap();
        let g: Vec<Element> = gens.iter().map(|&r| elem(&f, r)).collect();
        let cut = split.min(g.len());
        let u = Subspace::span(&f, &g[..cut]);
        let v = Subspace::span(&f, &g[cut..]);
        let w = Subspace::span(&f, &g[..cut / 2 + 1]);
        let (duv, dvw, duw) = (subspace_distance(&f, &u, &v), subspace_distance(&f, &v, &w), subspace_distance(&f, &u, &w));
        prop_assert_eq!(duv, subspace_distance(&f, &v, &u));
        prop_assert!(duw <= duv + dvw);
        prop_assert_eq!(duv == 0, u == v);
    }

    #[test]
    fn subspace_polynomial_roundtrip(gens in proptest::collection::vec(any::<u128>(), 1..4), p_idx in 0usize..3) {
        let (p, h, n) = [(2u64, 1usize, 7usize), (3, 1, 5), (2, 2, 3)][p_idx];
        let f = Field::new(p, h, n, 1).unwrap();
        let g: Vec<Element> = gens.iter().map(|&r| elem(&f, r)).collect();
        let v = Subspace::span(&f, &g);
        let poly = subspace_polynomial(&f, &v).unwrap();
        prop_assert_eq!(poly.sdegree(), v.dim());
        prop_assert_eq!(poly.leading(), Element::ONE);
        prop_assert_eq!(kernel_dim(&f, &poly), v.dim());
        for x in v.elements(&f) {
            prop_assert!(evaluate(&f, &poly, x).is_zero());
        }
    }
}

/// P_{αV} = α^{q^k} P_V(α^{−1}x), shifts keep the gap, and shifts in one
/// orbit are at distance at least twice the gap.
#[test]
fn shift_covariance_on_seeded_instances() {
    use rand::{Rng, SeedableRng};
    let f = Field::new(2, 1, 9, 1).unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(100);
    for _ in 0..100 {
        let k = rng.gen_range(1..=4);
        let gens: Vec<Element> = (0..k).map(|_| f.element(rng.gen_range(1..f.order())).unwrap()).collect();
        let v = Subspace::span(&f, &gens);
        let alpha = f.element(rng.gen_range(1..f.order())).unwrap();
        let pv = subspace_polynomial(&f, &v).unwrap();
        let shifted = cyclic_shift(&f, &v, alpha).unwrap();
        let p_shift = subspace_polynomial(&f, &shifted).unwrap();
        assert_eq!(p_shift, shifted_polynomial(&f, &pv, alpha).unwrap());
        let (g1, _) = gap_or_top(&pv);
        let (g2, _) = gap_or_top(&p_shift);
        assert_eq!(g1, g2);
        if shifted != v {
            assert!(subspace_distance(&f, &v, &shifted) >= 2 * g1);
        }
    }
}

#[test]
fn enumeration_independent_of_execution() {
    for (p, n, d) in [(2u64, 7usize, 3usize), (3, 4, 2), (2, 9, 3)] {
        let f = Field::new(p, 1, n, 1).unwrap();
        let seq = enumerate_max_kernel(&f, d, &EnumerateOptions { exec: Exec::Sequential, ..Default::default() }).unwrap();
        for workers in [1, 2, 4] {
            let par = maxkernel::parallel::with_workers(workers, || {
                enumerate_max_kernel(&f, d, &EnumerateOptions { exec: Exec::Parallel, ..Default::default() }).unwrap()
            });
            assert_eq!(seq, par);
        }
    }
}
