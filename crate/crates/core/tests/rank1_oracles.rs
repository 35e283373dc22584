use cameral::rank1::{poly, run_rank1, Fq, HyperCurve, PicClass, DEFAULT_MAX_ENUM};

/// Points over F_q including the one at infinity.
fn count_points(field: &Fq, f: &[u32]) -> i64 {
    1 + field.elements().map(|x| 1 + field.legendre(poly::eval(field, f, x))).sum::<i64>()
}

/// |Jac(F_q)| from point counts over F_q and F_{q²} (q prime, so the
/// coefficients embed as integers).
fn jacobian_order_from_points(curve: &HyperCurve) -> i64 {
    let q = curve.field().order() as i64;
    let n1 = count_points(curve.field(), curve.f());
    match curve.genus() {
        1 => n1,
        2 => {
            let big = Fq::new((q * q) as u32).unwrap();
            let f2: Vec<u32> = curve.f().iter().map(|&c| big.from_int(c as i64)).collect();
            let n2 = count_points(&big, &f2);
            (n1 * n1 + n2) / 2 - q
        }
        g => panic!("no point-count formula for genus {g}"),
    }
}

#[test]
fn jacobian_orders_match_point_counts() {
    for (q, g) in [(3, 1), (3, 2), (5, 1), (5, 2), (7, 1), (7, 2)] {
        let curve = HyperCurve::default_for(q, g).unwrap();
        let jac = curve.enumerate_jacobian(DEFAULT_MAX_ENUM).unwrap();
        assert_eq!(jac.len() as i64, jacobian_order_from_points(&curve), "q = {q}, g = {g}");
    }
    // a non-monic model
    let curve = HyperCurve::new(Fq::new(5).unwrap(), vec![1, 1, 0, 0, 0, 2]).unwrap();
    let jac = curve.enumerate_jacobian(DEFAULT_MAX_ENUM).unwrap();
    assert_eq!(jac.len() as i64, jacobian_order_from_points(&curve));
}

#[test]
fn group_axioms_exhaustive() {
    for (q, g) in [(3, 2), (5, 1), (5, 2)] {
        let c = HyperCurve::default_for(q, g).unwrap();
        let jac = c.enumerate_jacobian(DEFAULT_MAX_ENUM).unwrap();
        for a in &jac {
            assert_eq!(c.sigma_pullback(&c.sigma_pullback(&PicClass { degree: 3, class: a.clone() })).class, *a);
            for b in &jac {
                let ab = c.cantor_add(a, b);
                assert!(c.is_valid(&ab));
                assert_eq!(ab, c.cantor_add(b, a));
                for d in &jac {
                    assert_eq!(c.cantor_add(&ab, d), c.cantor_add(a, &c.cantor_add(b, d)));
                }
            }
        }
    }
}

#[test]
fn reports_pass() {
    for (q, g) in [(3, 2), (5, 2), (7, 1), (9, 1), (9, 2), (25, 1)] {
        let curve = HyperCurve::default_for(q, g).unwrap();
        let report = run_rank1(&curve, DEFAULT_MAX_ENUM).unwrap();
        assert!(report.passed(), "{report:?}");
    }
}
