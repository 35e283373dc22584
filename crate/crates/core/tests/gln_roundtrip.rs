use cameral::glncover::{
    charpoly_condition, random_coeffs, random_element, roundtrip_check, spectral_from_coeffs, SplittingAlgebra,
};
use cameral::linalg::rational::q;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn random_and_degenerate_covers() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for n in 2..=4 {
        let start = std::time::Instant::now();
        let mut covers: Vec<Vec<_>> = (0..20).map(|_| random_coeffs(&mut rng, n)).collect();
        covers.push(vec![q(0); n]);
        for coeffs in covers {
            let spec = spectral_from_coeffs(n, coeffs.clone()).unwrap();
            assert!(roundtrip_check(&spec).unwrap().passed(), "{coeffs:?}");
            let alg = SplittingAlgebra::new(&spec);
            assert!(alg.symmetric_identities_hold());
            assert!(charpoly_condition(&spec, &alg, &spec.x()));
            for _ in 0..10 {
                let f = random_element(&mut rng, n);
                assert!(charpoly_condition(&spec, &alg, &f), "{coeffs:?} {f:?}");
            }
        }
        eprintln!("n = {n}: {:?}", start.elapsed());
    }
}
