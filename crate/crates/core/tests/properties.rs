use chanent::bounds::{
    certify_concavity_channel, certify_concavity_state, certify_minkowski, certify_prop1,
    certify_prop3, certify_prop4, certify_subadditivity, in_concavity_domain,
};
use chanent::entropies::{
    binary_tsallis, max_entropy, quantum_unified, unified_classical, unified_from_tsallis,
    DensityMatrix, EntropyParams, ProbVector, QParam,
};
use chanent::kernel::{
    birkhoff_decompose, birkhoff_reconstruction_error, check_majorization, hermitian_eigenvalues,
};
use chanent::random::{
    random_channel, random_density, random_doubly_stochastic, random_positive, random_unitary,
};
use proptest::prelude::*;

fn shape() -> impl Strategy<Value = (usize, usize)> {
    (2usize..=3, 1usize..=4)
}

fn concave_params() -> impl Strategy<Value = EntropyParams> {
    (0.2f64..4.0, -2.0f64..3.0).prop_filter_map("outside the concavity domain", |(q, s)| {
        let p = EntropyParams::new(q, s).ok()?;
        in_concavity_domain(p).then_some(p)
    })
}

fn any_params() -> impl Strategy<Value = EntropyParams> {
    prop_oneof![
        (0.1f64..5.0, -3.0f64..3.0).prop_map(|(q, s)| EntropyParams::new(q, s).unwrap()),
        (0.1f64..5.0).prop_map(|q| EntropyParams::renyi(q).unwrap()),
        (-3.0f64..3.0).prop_map(|s| EntropyParams::new(1.0, s).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn unitary_invariance(d in 2usize..=4, seed: u64, params in any_params()) {
        let rho = random_density(d, seed).unwrap();
        let u = random_unitary(d, seed ^ 1).unwrap();
        let a = quantum_unified(&rho, params).unwrap();
        let b = quantum_unified(&rho.conjugate_by(&u).unwrap(), params).unwrap();
        prop_assert!((a - b).abs() < 1e-9);
    }

    #[test]
    fn entropy_is_bounded_by_maximum(d in 1usize..=5, seed: u64, params in any_params()) {
        let rho = random_density(d, seed).unwrap();
        let h = quantum_unified(&rho, params).unwrap();
        prop_assert!(h >= -1e-12);
        prop_assert!(h <= max_entropy(d, params).unwrap() + 1e-9);
    }

    #[test]
    fn unified_entropy_is_concave(d in 2usize..=3, seed: u64, theta in 0.0f64..=1.0, params in concave_params()) {
        let rho = random_density(d, seed).unwrap();
        let ups = random_density(d, seed.wrapping_add(1)).unwrap();
        let mix = rho.mix(&ups, theta).unwrap();
        let lhs = theta * quantum_unified(&rho, params).unwrap()
            + (1.0 - theta) * quantum_unified(&ups, params).unwrap();
        prop_assert!(quantum_unified(&mix, params).unwrap() >= lhs - 1e-9);
    }

    #[test]
    fn outputs_are_states((d, n) in shape(), dout in 1usize..=3, seed: u64) {
        prop_assume!(dout * n >= d);
        let ch = random_channel(d, dout, n, seed).unwrap();
        let rho = random_density(d, seed ^ 7).unwrap();
        let out = ch.apply(&rho).unwrap();
        prop_assert!((out.matrix().trace().re - 1.0).abs() < 1e-12);
        prop_assert!(hermitian_eigenvalues(out.matrix()).unwrap().iter().all(|&x| x > -1e-12));
        prop_assert!(DensityMatrix::new(out.into_matrix()).is_ok());
    }

    #[test]
    fn choi_round_trip((d, n) in shape(), seed: u64) {
        let ch = random_channel(d, d, n, seed).unwrap();
        let choi = ch.choi();
        let back = choi.kraus_from_choi().unwrap();
        prop_assert!(back.kraus_count() <= n.min(d * d));
        prop_assert!(back.choi().dynamical().frobenius_distance(choi.dynamical()) < 1e-8);
    }

    #[test]
    fn q_average_output_bound((d, n) in shape(), seed: u64, q in 1.0f64..4.0) {
        let ch = random_channel(d, d, n, seed).unwrap();
        let rho = random_density(d, seed ^ 3).unwrap();
        let cert = certify_prop1(&ch, &rho, q).unwrap();
        prop_assert!(cert.holds, "{:?}", cert);
    }

    #[test]
    fn concavity_certificates((d, n) in shape(), seed: u64, theta in 0.0f64..=1.0, params in concave_params()) {
        let ch = random_channel(d, d, n, seed).unwrap();
        let other = random_channel(d, d, 2, seed ^ 5).unwrap();
        let rho = random_density(d, seed ^ 11).unwrap();
        let ups = random_density(d, seed ^ 13).unwrap();
        prop_assert!(certify_concavity_state(&ch, &rho, &ups, theta, params).unwrap().holds);
        prop_assert!(certify_concavity_channel(&ch, &other, &rho, theta, params).unwrap().holds);
    }

    #[test]
    fn fano_bounds((d, n) in shape(), seed: u64, params in any_params()) {
        let ch = random_channel(d, d, n, seed).unwrap();
        let rho = random_density(d, seed ^ 17).unwrap();
        for cert in certify_prop3(&ch, &rho, params).unwrap() {
            prop_assert!(cert.holds, "{:?}", cert);
        }
    }

    #[test]
    fn map_entropy_bound((d, n) in shape(), seed: u64, params in any_params()) {
        let ch = random_channel(d, d, n, seed).unwrap();
        let cert = certify_prop4(&ch, params).unwrap();
        prop_assert!(cert.holds, "{:?}", cert);
    }

    #[test]
    fn tsallis_to_unified_is_monotone(q in 0.1f64..5.0, s in -3.0f64..3.0, a in 0.0f64..1.0, b in 0.0f64..1.0) {
        let p = EntropyParams::new(q, s).unwrap();
        let limit = if q > 1.0 { 0.999 / (q - 1.0) } else { 10.0 };
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let x = unified_from_tsallis(lo * limit, p).unwrap();
        let y = unified_from_tsallis(hi * limit, p).unwrap();
        prop_assert!(x <= y + 1e-12);
    }

    #[test]
    fn doubly_stochastic_maps_majorize(d in 2usize..=5, seed: u64, x in prop::collection::vec(0.0f64..1.0, 5), params in any_params()) {
        let s = random_doubly_stochastic(d, seed).unwrap();
        let total: f64 = x[..d].iter().sum();
        prop_assume!(total > 1e-3);
        let p: Vec<f64> = x[..d].iter().map(|v| v / total).collect();
        let mixed = s.apply(&p);
        prop_assert!(check_majorization(&mixed, &p).unwrap());
        // Schur concavity of the unified entropy.
        let a = unified_classical(&ProbVector::new(mixed).unwrap(), params);
        let b = unified_classical(&ProbVector::new(p).unwrap(), params);
        prop_assert!(a >= b - 1e-9);
    }

    #[test]
    fn birkhoff_reconstructs(d in 2usize..=5, seed: u64) {
        let s = random_doubly_stochastic(d, seed).unwrap();
        let terms = birkhoff_decompose(&s).unwrap();
        prop_assert!(birkhoff_reconstruction_error(&s, &terms) < 1e-8);
        prop_assert!(terms.len() <= (d - 1) * (d - 1) + 1);
        let w: f64 = terms.iter().map(|t| t.weight).sum();
        prop_assert!((w - 1.0).abs() < 1e-9);
    }

    #[test]
    fn minkowski_anti_norm(seed: u64, q in prop_oneof![-3.0f64..-0.1, 0.1f64..0.95, 1.05f64..4.0]) {
        let a = random_positive(3, seed);
        let z = random_positive(3, seed ^ 19);
        let cert = certify_minkowski(&a, &z, q).unwrap();
        prop_assert!(cert.holds, "{:?}", cert);
    }

    #[test]
    fn binary_tsallis_symmetric(p in 0.0f64..=1.0, q in 0.1f64..5.0) {
        let qp = QParam::new(q).unwrap();
        let a = binary_tsallis(p, qp).unwrap();
        let b = binary_tsallis(1.0 - p, qp).unwrap();
        prop_assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn q_entropy_subadditive(seed: u64, q in 1.0f64..4.0) {
        let rho = random_density(4, seed).unwrap();
        prop_assert!(certify_subadditivity(&rho, (2, 2), q).unwrap().holds);
    }
}
