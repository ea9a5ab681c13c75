use std::collections::HashMap;

use ncmotzkin::bijections::strip_contract;
use ncmotzkin::exactnum::{alpha_beta_weights, d_sequence, d_weights, fib2_weights, rat};
use ncmotzkin::partitions::{count_nc, nc_profile, DEFAULT_MAX_PARTITION_N};
use ncmotzkin::paths::{count_sch_even, enumerate_paths, path_weight, weighted_sum, Flavor};
use ncmotzkin::Rational;

#[test]
fn strip_contraction_fibers_carry_alpha_beta_weights() {
    let d = d_sequence::<Rational>();
    let dyck = d_weights::<Rational>();
    let ab = alpha_beta_weights::<Rational>();
    for n in 1..=7 {
        let mut fibers: HashMap<String, Rational> = HashMap::new();
        for p in enumerate_paths(Flavor::Dyck, n) {
            let m = strip_contract(&p).unwrap();
            assert_eq!(m.path().len(), n - 1);
            let w = path_weight(&p, &dyck).unwrap();
            assert_eq!(m.transported_weight(&d), w);
            *fibers.entry(m.path().to_string()).or_insert_with(|| rat(0, 1)) += w;
        }
        for m in enumerate_paths(Flavor::Motzkin, n - 1) {
            assert_eq!(fibers[&m.to_string()], path_weight(&m, &ab).unwrap(), "{m}");
        }
    }
}

#[test]
fn path_sum_identities() {
    let (fib2, dyck, ab) = (
        fib2_weights::<Rational>(),
        d_weights::<Rational>(),
        alpha_beta_weights::<Rational>(),
    );
    for n in 0..=10 {
        let mot = weighted_sum(Flavor::Motzkin, n, &fib2).unwrap();
        assert_eq!(weighted_sum(Flavor::Dyck, n, &dyck).unwrap(), mot);
        let sch = Rational::from_integer(count_sch_even(n).into());
        assert_eq!(weighted_sum(Flavor::Motzkin, n, &ab).unwrap(), sch);
        if n >= 1 {
            assert_eq!(weighted_sum(Flavor::Motzkin, n - 1, &ab).unwrap(), mot);
        }
    }
}

#[test]
fn chain_through_twelve() {
    let fib2 = fib2_weights::<Rational>();
    for n in 1..=12 {
        let nc = Rational::from_integer(count_nc(2, n).unwrap().into());
        let sch = Rational::from_integer(count_sch_even(n - 1).into());
        assert_eq!(nc, sch);
        assert_eq!(nc, weighted_sum(Flavor::Motzkin, n, &fib2).unwrap());
    }
}

#[test]
fn nc_counts_are_monotone_and_reach_bell() {
    let bell = [1u64, 1, 2, 5, 15, 52, 203, 877, 4140, 21147];
    for n in 0..=9 {
        let profile = nc_profile(n, DEFAULT_MAX_PARTITION_N).unwrap();
        assert!(profile.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(*profile.last().unwrap(), bell[n]);
        for k in n..n + 3 {
            assert_eq!(count_nc(k, n).unwrap(), bell[n]);
        }
    }
}
