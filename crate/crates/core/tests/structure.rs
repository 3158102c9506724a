use exsuper_core::lattice::{pairing, root_datum, to_metric, FormValue, MetricVector};
use exsuper_core::reflection::ReflectionDag;
use exsuper_core::{SuperType, Weight};

#[test]
fn rho_is_half_sum_difference() {
    for ty in SuperType::ALL {
        let rd = root_datum(ty);
        assert_eq!(rd.rho_from_roots(), rd.rho, "{ty}");
        assert_eq!(rd.rho0 - rd.rho1, rd.rho, "{ty}");
    }
}

#[test]
fn rho_values() {
    // ρ₁ = 7/2·δ and ρ = −5/2·δ + ω₁ + ω₂ for G(3).
    let g = root_datum(SuperType::G3);
    assert_eq!(g.rho1, MetricVector::from_halves(&[7, 0, 0]));
    let w = Weight::new(SuperType::G3, &[0, 1, 1]).unwrap();
    assert_eq!(
        g.rho,
        to_metric(&w) + MetricVector::from_halves(&[-5, 0, 0])
    );
    // ρ = ω₁ + ω₂ + ω₃ − 3ω₄ for F(3|1).
    let f = root_datum(SuperType::F31);
    let w = Weight::new(SuperType::F31, &[1, 1, 1, -3]).unwrap();
    assert_eq!(f.rho, to_metric(&w));
}

#[test]
fn odd_roots_are_isotropic() {
    for ty in SuperType::ALL {
        let rd = root_datum(ty);
        for b in &rd.odd_roots {
            assert!(pairing(b, b, ty).unwrap().is_exact_zero(), "{ty} {b:?}");
        }
        // Every odd root is isotropic except ±δ in G(3).
        for b in &rd.odd_positive_roots {
            let iso = pairing(b, b, ty).unwrap().is_exact_zero();
            let delta = ty == SuperType::G3 && b.halves()[1..].iter().all(|&h| h == 0);
            assert_eq!(iso, !delta, "{ty} {b:?}");
        }
    }
    let b1 = MetricVector::from_integers(&[1, -1, -1]);
    assert_eq!(
        pairing(&b1, &b1, SuperType::G3).unwrap(),
        FormValue::from_integers(-2 + 2, 0)
    );
}

#[test]
fn f31_odd_roots_are_half_vectors() {
    let rd = root_datum(SuperType::F31);
    for b in &rd.odd_positive_roots {
        assert!(b.halves().iter().all(|h| h.abs() == 1), "{b:?}");
    }
}

#[test]
fn gram_is_symmetric() {
    for ty in SuperType::ALL {
        let n = ty.metric_dim();
        for i in 0..n {
            for j in 0..n {
                let mut u = vec![0; n];
                let mut v = vec![0; n];
                u[i] = 1;
                v[j] = 1;
                let (u, v) = (
                    MetricVector::from_integers(&u),
                    MetricVector::from_integers(&v),
                );
                assert_eq!(pairing(&u, &v, ty).unwrap(), pairing(&v, &u, ty).unwrap());
            }
        }
    }
}

#[test]
fn simple_system_counts() {
    for (ty, k) in [(SuperType::D21, 4), (SuperType::G3, 4), (SuperType::F31, 6)] {
        let rd = root_datum(ty);
        assert_eq!(rd.simple_systems.len(), k);
        assert!(rd.simple_systems.iter().all(|pi| pi.len() == ty.rank()));
    }
}

#[test]
fn simple_roots_are_roots() {
    for ty in SuperType::ALL {
        let rd = root_datum(ty);
        for pi in &rd.simple_systems {
            for a in pi {
                assert!(rd.is_root(a), "{ty} {a:?}");
            }
        }
    }
}

#[test]
fn even_simple_roots_are_covered() {
    for ty in SuperType::ALL {
        let rd = root_datum(ty);
        for a in &rd.even_simple_roots {
            let covered = rd
                .simple_systems
                .iter()
                .flatten()
                .any(|x| x == a || *x * 2 == *a);
            assert!(covered, "{ty} {a:?}");
        }
    }
}

#[test]
fn positive_systems_share_the_even_part() {
    for ty in SuperType::ALL {
        let rd = root_datum(ty);
        let total = rd.even_positive_roots.len() + rd.odd_positive_roots.len();
        let mut even0 = rd.even_positive_roots.clone();
        even0.sort();
        for i in 0..rd.simple_systems.len() {
            let pos = rd.positive_system(i);
            assert_eq!(pos.len(), total, "{ty} Π{i}");
            let mut even: Vec<_> = pos.iter().copied().filter(|r| !rd.is_odd_root(r)).collect();
            even.sort();
            assert_eq!(even, even0, "{ty} Π{i}");
        }
    }
}

#[test]
fn standard_positive_system_is_the_stored_one() {
    for ty in SuperType::ALL {
        let rd = root_datum(ty);
        let mut pos = rd.positive_system(0);
        pos.sort();
        let mut stored: Vec<_> = rd
            .even_positive_roots
            .iter()
            .chain(&rd.odd_positive_roots)
            .copied()
            .collect();
        stored.sort();
        assert_eq!(pos, stored, "{ty}");
    }
}

#[test]
fn edges_swap_exactly_one_root() {
    for ty in SuperType::ALL {
        let rd = root_datum(ty);
        for e in ReflectionDag::new(ty).edges() {
            let beta = rd.odd_roots[e.odd_root];
            let mut expected: Vec<_> = rd
                .positive_system(e.src)
                .into_iter()
                .filter(|r| *r != beta)
                .chain([-beta])
                .collect();
            expected.sort();
            let mut got = rd.positive_system(e.dst);
            got.sort();
            assert_eq!(got, expected, "{ty} {e:?}");
        }
    }
}

#[test]
fn simple_systems_follow_by_odd_reflection() {
    for ty in SuperType::ALL {
        let rd = root_datum(ty);
        for e in ReflectionDag::new(ty).edges() {
            let beta = rd.odd_roots[e.odd_root];
            let mut got = rd.odd_reflect_system(&rd.simple_systems[e.src], &beta);
            let mut want = rd.simple_systems[e.dst].clone();
            got.sort();
            want.sort();
            assert_eq!(got, want, "{ty} {e:?}");
        }
    }
}

#[test]
fn weight_images_have_small_denominators() {
    for ty in SuperType::ALL {
        for coords in [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]] {
            let w = Weight::new(ty, &coords[..ty.rank()]).unwrap();
            let m = to_metric(&w);
            if ty != SuperType::F31 {
                assert!(m.is_integral(), "{ty} {w}");
            }
        }
    }
}
