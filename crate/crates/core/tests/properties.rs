use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sigmahull::hullsteer::{conjugate_monomial, random_monomial};
use sigmahull::mpcode::{distance_bound, is_non_singular_by_columns};
use sigmahull::oracle::{
    oracle_sigma_hull_dim, same_span, sigma_dual_by_definition, span_intersection_dim,
    ORACLE_BUDGET,
};
use sigmahull::semilinear::{
    bidual_relative_formulas, galois_dual, hermitian_dual, relative_hull_formulas, sigma_dual,
    sigma_hull, sigma_hull_dim,
};
use sigmahull::verify::{
    field_of_order, random_code, random_full_rank, random_mp_instance, random_sigma,
};
use sigmahull::{Field, LinearCode, Matrix, SemilinearIsometry};

const ORDERS: [u32; 8] = [2, 3, 4, 5, 7, 8, 9, 16];

fn field(i: usize) -> Arc<Field> {
    field_of_order(ORDERS[i % ORDERS.len()]).unwrap()
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_matrix(rng: &mut ChaCha8Rng, f: &Arc<Field>, r: usize, c: usize) -> Matrix {
    use rand::Rng;
    let data = (0..r * c).map(|_| rng.gen_range(0..f.order())).collect();
    Matrix::from_entries(f, r, c, data).unwrap()
}

fn code_with_dim(rng: &mut ChaCha8Rng, f: &Arc<Field>, n: usize, k: usize) -> LinearCode {
    random_code(rng, f, n, k.clamp(1, n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn field_axioms(fi in 0usize..8, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let f = field(fi);
        let (a, b, c) = (a % f.order(), b % f.order(), c % f.order());
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        if a != 0 && b != 0 {
            let ab = f.inv(f.mul(a, b)).unwrap();
            prop_assert_eq!(ab, f.mul(f.inv(b).unwrap(), f.inv(a).unwrap()));
        }
    }

    #[test]
    fn frobenius_is_an_automorphism(fi in 0usize..8, a in any::<u32>(), b in any::<u32>(), s in 1u32..5) {
        let f = field(fi);
        let (a, b) = (a % f.order(), b % f.order());
        let s = 1 + (s - 1) % f.degree();
        let p = |x| f.frobenius(x, s).unwrap();
        prop_assert_eq!(p(f.mul(a, b)), f.mul(p(a), p(b)));
        prop_assert_eq!(p(f.add(a, b)), f.add(p(a), p(b)));
        prop_assert_eq!(f.frobenius(a, f.degree()).unwrap(), a);
    }

    #[test]
    fn rank_and_kernel(fi in 0usize..8, r in 1usize..6, c in 1usize..6, seed in any::<u64>()) {
        let f = field(fi);
        let mut g = rng(seed);
        let m = random_matrix(&mut g, &f, r, c);
        prop_assert_eq!(m.rank(), m.transpose().rank());
        let k = m.kernel_basis();
        prop_assert_eq!(k.rows() + m.rank(), c);
        prop_assert!(m.mul_transpose(&k).unwrap().is_zero());
    }

    #[test]
    fn kronecker_rank(fi in 0usize..8, seed in any::<u64>(), r1 in 1usize..4, c1 in 1usize..4, r2 in 1usize..4, c2 in 1usize..4) {
        let f = field(fi);
        let mut g = rng(seed);
        let a = random_matrix(&mut g, &f, r1, c1);
        let b = random_matrix(&mut g, &f, r2, c2);
        prop_assert_eq!(a.kronecker(&b).unwrap().rank(), a.rank() * b.rank());
    }

    #[test]
    fn code_invariants(fi in 0usize..8, n in 1usize..7, k in 1usize..7, seed in any::<u64>()) {
        let f = field(fi);
        let mut g = rng(seed);
        let c = code_with_dim(&mut g, &f, n, k);
        let dd = LinearCode::from_generator(&c.euclidean_dual().parity_check().clone()).unwrap();
        prop_assert!(dd.same_code(&c).unwrap());
        if c.codeword_count() <= ORACLE_BUDGET {
            let d = c.min_distance().unwrap();
            prop_assert!(d <= n - c.dimension() + 1);
            let m = random_monomial(&f, n, &mut g);
            let image = c.apply_monomial(&m).unwrap();
            prop_assert_eq!(image.weight_distribution().unwrap(), c.weight_distribution().unwrap());
        }
    }

    #[test]
    fn intersection_matches_enumeration(fi in 0usize..6, n in 1usize..7, seed in any::<u64>()) {
        let f = field(fi);
        let mut g = rng(seed);
        let c1 = code_with_dim(&mut g, &f, n, 1 + (seed as usize) % n);
        let c2 = code_with_dim(&mut g, &f, n, 1 + (seed as usize / 7) % n);
        let small = c1.dimension().min(c2.dimension()) as u32;
        prop_assume!((f.order() as u128).pow(small) <= ORACLE_BUDGET);
        prop_assert_eq!(
            c1.intersect_dim(&c2).unwrap(),
            span_intersection_dim(c1.generator(), c2.generator(), ORACLE_BUDGET).unwrap()
        );
    }

    #[test]
    fn sigma_dual_invariants(fi in 0usize..8, n in 1usize..7, k in 1usize..7, seed in any::<u64>()) {
        let f = field(fi);
        let mut g = rng(seed);
        let c = code_with_dim(&mut g, &f, n, k);
        let sigma = random_sigma(&mut g, &f, n);
        let dual = sigma_dual(&c, &sigma).unwrap();
        prop_assert_eq!(dual.dimension() + c.dimension(), n);
        let by_definition = sigma_dual_by_definition(&c, &sigma).unwrap();
        prop_assert!(same_span(dual.generator(), &by_definition, u128::MAX).unwrap());
        let image_dual = sigma.image(&c).unwrap().euclidean_dual();
        prop_assert!(same_span(dual.generator(), image_dual.generator(), u128::MAX).unwrap());
        for row in c.generator().row_iter() {
            for d in dual.generator().row_iter() {
                prop_assert_eq!(sigma.inner(d, row).unwrap(), 0);
            }
        }
    }

    #[test]
    fn rank_formulas_agree(fi in 0usize..8, n in 1usize..7, seed in any::<u64>()) {
        let f = field(fi);
        let mut g = rng(seed);
        let c1 = code_with_dim(&mut g, &f, n, 1 + (seed as usize) % n);
        let c2 = code_with_dim(&mut g, &f, n, 1 + (seed as usize / 11) % n);
        let sigma = random_sigma(&mut g, &f, n);
        let r = relative_hull_formulas(&c1, &c2, &sigma).unwrap();
        prop_assert_eq!(r.via_parity, r.via_generator);
        let b = bidual_relative_formulas(&c1, &c2, &sigma).unwrap();
        prop_assert_eq!(b.via_parity, b.via_generator);
        let hull = sigma_hull(&c1, &sigma).unwrap();
        let dual = sigma_dual(&c1, &sigma).unwrap();
        prop_assert_eq!(sigma_hull_dim(&dual, &sigma).unwrap(), hull.dim);
        for row in hull.basis.row_iter() {
            prop_assert!(c1.contains(row) && dual.contains(row));
        }
    }

    #[test]
    fn hull_is_basis_independent(fi in 0usize..8, n in 1usize..6, seed in any::<u64>()) {
        let f = field(fi);
        let mut g = rng(seed);
        let c = code_with_dim(&mut g, &f, n, 1 + (seed as usize) % n);
        let sigma = random_sigma(&mut g, &f, n);
        let change = random_full_rank(&mut g, &f, c.dimension(), c.dimension());
        let rebased = change.mul(c.generator()).unwrap();
        prop_assume!((f.order() as u128).pow(c.dimension().min(n - c.dimension()) as u32) <= ORACLE_BUDGET);
        let direct = oracle_sigma_hull_dim(&c, &sigma, ORACLE_BUDGET).unwrap();
        let other = oracle_sigma_hull_dim(&LinearCode::from_generator(&rebased).unwrap(), &sigma, ORACLE_BUDGET).unwrap();
        prop_assert_eq!(direct, other);
    }

    #[test]
    fn galois_and_hermitian_reductions(fi in 0usize..8, n in 1usize..6, seed in any::<u64>(), ell in 0u32..4) {
        let f = field(fi);
        let e = f.degree();
        let ell = ell % e;
        let mut g = rng(seed);
        let c = code_with_dim(&mut g, &f, n, 1 + (seed as usize) % n);
        let galois = SemilinearIsometry::galois(&f, n, ell).unwrap();
        prop_assert!(sigma_dual(&c, &galois).unwrap().same_code(&galois_dual(&c, ell).unwrap()).unwrap());
        let euclid = SemilinearIsometry::euclidean(&f, n);
        prop_assert!(sigma_dual(&c, &euclid).unwrap().same_code(&c.euclidean_dual()).unwrap());
        if e % 2 == 0 {
            let herm = SemilinearIsometry::hermitian(&f, n).unwrap();
            prop_assert!(sigma_dual(&c, &herm).unwrap().same_code(&hermitian_dual(&c).unwrap()).unwrap());
        }
    }

    #[test]
    fn conjugation_identity(fi in 1usize..8, n in 1usize..6, seed in any::<u64>(), s in 1u32..5) {
        let f = field(fi);
        let s = 1 + (s - 1) % f.degree();
        let mut g = rng(seed);
        let m = random_monomial(&f, n, &mut g);
        let mp = random_monomial(&f, n, &mut g);
        let m2 = conjugate_monomial(&m, &mp, s).unwrap();
        let lhs = m2.frobenius(s).unwrap().compose(&m).unwrap();
        prop_assert_eq!(lhs, m.compose(&mp).unwrap());
    }

    #[test]
    fn mp_code_dimension_and_bound(fi in 1usize..5, n in 1usize..4, k in 2usize..4, seed in any::<u64>()) {
        let f = field(fi);
        let mut g = rng(seed);
        let (spec, _) = random_mp_instance(&mut g, &f, k, n, false, ORACLE_BUDGET);
        let code = spec.code();
        let total: usize = spec.constituents().iter().map(LinearCode::dimension).sum();
        prop_assert_eq!(code.dimension(), total);
        if is_non_singular_by_columns(spec.defining_matrix()) {
            if let (Ok(d), Some(b)) = (code.min_distance(), distance_bound(&spec).unwrap()) {
                prop_assert!(d >= b);
            }
        }
    }
}
