//! Acceptance criteria. Every check is exact rational equality.
//!
//! Run with `cargo test -p ncmotzkin --test acceptance -- --nocapture` to see
//! one PASS/FAIL line per criterion.

use std::collections::{HashMap, HashSet};

use ncmotzkin::bijections::{
    choice_motzkin_paths, contract_dyck, expand_motzkin, from_schroder, labeled_motzkin_paths,
    odd_h_to_peaks, peaks_to_odd_h, to_schroder, Floor,
};
use ncmotzkin::contfrac::{contract_s_to_j, j_expand, qd_extract, r_ladder_check, s_expand};
use ncmotzkin::exactnum::{
    alpha_beta_weights, b_sequence, catalan_fib_identity, d_sequence, fib2_weights,
    lambda_sequence, nc0_weights, nc1_weights, nc3_weights, rat, weight_b, weight_d,
    weight_lambda, Sequence, WeightSystem,
};
use ncmotzkin::partitions::count_nc;
use ncmotzkin::paths::{
    count_no_even_peaks, count_sch_even_enumerated, enumerate_paths, enumerated_sum,
    has_even_peak, is_sch_even, path_weight, weighted_sum, Flavor,
};
use ncmotzkin::series::gf_nc2;
use ncmotzkin::{JFraction, Rational, SFraction};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn int(n: u64) -> Rational {
    Rational::from_integer(n.into())
}

fn fib2_fraction() -> JFraction {
    JFraction::new(b_sequence(), lambda_sequence())
}

/// #NC_2(n) = Mot_n(b, lambda) for 0 <= n <= 12.
fn main_identity() -> Check {
    let w = fib2_weights::<Rational>();
    for n in 0..=12 {
        let brute = count_nc(2, n).map_err(|e| e.to_string())?;
        let paths = weighted_sum(Flavor::Motzkin, n, &w).unwrap();
        ensure(int(brute) == paths, || format!("n={n}: #NC_2 = {brute}, Mot_n(b,lambda) = {paths}"))?;
    }
    Ok(())
}

/// Closed-form generating function against the partition counts.
fn generating_function() -> Check {
    let g = gf_nc2::<Rational>(12);
    let head: Vec<Rational> = [1, 1, 2, 5, 15, 51].map(int).to_vec();
    ensure(g.coeffs()[..6] == head[..], || format!("head {:?}", &g.coeffs()[..6]))?;
    for n in 0..=12 {
        let brute = count_nc(2, n).map_err(|e| e.to_string())?;
        ensure(g.coeff(n) == &int(brute), || {
            format!("n={n}: gf {} vs brute {brute}", g.coeff(n))
        })?;
    }
    Ok(())
}

/// Explicit S-fraction coefficients recovered from the series.
fn explicit_s_fraction() -> Check {
    let printed = [
        rat(1, 1),
        rat(1, 1),
        rat(1, 1),
        rat(2, 1),
        rat(1, 2),
        rat(5, 2),
        rat(2, 5),
        rat(13, 5),
        rat(5, 13),
        rat(34, 13),
        rat(13, 34),
        rat(89, 34),
        rat(34, 89),
        rat(233, 89),
        rat(89, 233),
        rat(610, 233),
        rat(233, 610),
        rat(1597, 610),
    ];
    let got = qd_extract(&gf_nc2::<Rational>(25), 18).map_err(|e| e.to_string())?;
    ensure(got == printed, || format!("extracted {got:?}"))?;
    let d: Vec<Rational> = (0..18).map(weight_d).collect();
    ensure(d == printed, || "d sequence differs from printed list".into())?;
    let s = s_expand(&SFraction::new(d_sequence()), 30);
    ensure(s == gf_nc2(30), || "S(x; d) != gf to order 30".into())
}

/// The three d-identities and the Fibonacci Catalan identity.
fn d_identities() -> Check {
    for n in 0..=50usize {
        let prev = if n == 0 { rat(0, 1) } else { weight_d(2 * n - 1) };
        ensure(weight_b(n) == prev + weight_d(2 * n), || format!("b_{n}"))?;
        ensure(weight_lambda(n) == weight_d(2 * n) * weight_d(2 * n + 1), || {
            format!("lambda_{n}")
        })?;
        if n >= 1 {
            ensure(
                weight_d(2 * n - 1).recip() + weight_d(2 * n + 1) == rat(3, 1),
                || format!("1/d_(2n-1) + d_(2n+1) at n={n}"),
            )?;
        }
    }
    for m in 0..=40 {
        for i in 0..=m {
            ensure(catalan_fib_identity(m, i).unwrap(), || format!("Catalan m={m} i={i}"))?;
        }
    }
    Ok(())
}

fn random_sequence(rng: &mut ChaCha8Rng) -> Sequence<Rational> {
    let values: Vec<Rational> = (0..18)
        .map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=7)))
        .collect();
    Sequence::eventually_constant(values)
}

/// S-fraction = contracted J-fraction, and per-path weight transport.
fn contraction() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..100 {
        let f = SFraction::new(random_sequence(&mut rng));
        let s = s_expand(&f, 16);
        let j = j_expand(&contract_s_to_j(&f), 16);
        ensure(s == j, || format!("trial {trial}: {:?}", f.coeffs))?;
    }

    let d = d_sequence::<Rational>();
    let dyck_w = WeightSystem::dyck(d.clone());
    let fib2 = fib2_weights::<Rational>();
    for n in 0..=6 {
        // per path
        let mut fibers: HashMap<String, Rational> = HashMap::new();
        for p in enumerate_paths(Flavor::Dyck, n) {
            let m = contract_dyck(&p).unwrap();
            let direct = path_weight(&p, &dyck_w).unwrap();
            ensure(m.transported_weight(&d) == direct, || format!("path {p}"))?;
            *fibers.entry(m.path().to_string()).or_insert_with(|| rat(0, 1)) += direct;
        }
        // summed over each fiber of the unlabeled map
        for m in enumerate_paths(Flavor::Motzkin, n) {
            let fiber = fibers.get(&m.to_string()).cloned().unwrap_or_else(|| rat(0, 1));
            let w = path_weight(&m, &fib2).unwrap();
            ensure(fiber == w, || format!("fiber of {m}: {fiber} vs {w}"))?;
        }
    }
    Ok(())
}

/// R_m (1 - x R_{m+1}) = d_m for -1 <= m <= 8 at order 30.
fn r_ladder() -> Check {
    let check = r_ladder_check(8, 30);
    ensure(check.passed(), || format!("failed at m = {:?}", check.failed_at))?;
    ensure(check.constant_terms[0] == rat(1, 1), || "R_{-1}(0) != 1".into())?;
    for m in 0..=8 {
        ensure(check.constant_terms[m + 1] == weight_d(m), || {
            format!("R_{m}(0) = {}", check.constant_terms[m + 1])
        })?;
    }
    Ok(())
}

/// #NC_2(n) = #SCH_even(n-1) = Mot_{n-1}(alpha,beta) = Dyck_n(d) = Mot_n(b,lambda).
fn identity_chain() -> Check {
    let ab = alpha_beta_weights::<Rational>();
    let fib2 = fib2_weights::<Rational>();
    let dyck_series = s_expand(&SFraction::new(d_sequence()), 10);
    for n in 1..=10 {
        // partition brute force
        let nc = int(count_nc(2, n).map_err(|e| e.to_string())?);
        // Schröder enumeration and filter
        let sch = int(count_sch_even_enumerated(n - 1).to_u64().unwrap());
        // transfer DP
        let mot_ab = weighted_sum(Flavor::Motzkin, n - 1, &ab).unwrap();
        // continued fraction series
        let dyck = dyck_series.coeff(n).clone();
        // Motzkin enumeration
        let mot_fib = enumerated_sum(Flavor::Motzkin, n, &fib2).unwrap();
        let legs = [&nc, &sch, &mot_ab, &dyck, &mot_fib];
        ensure(legs.iter().all(|v| *v == &nc), || {
            format!("n={n}: {nc} / {sch} / {mot_ab} / {dyck} / {mot_fib}")
        })?;
    }
    Ok(())
}

/// Round trips of every bijection on its stated domain.
fn bijections() -> Check {
    for n in 0..=8 {
        for p in enumerate_paths(Flavor::Dyck, n) {
            let back = expand_motzkin(&contract_dyck(&p).unwrap()).unwrap();
            ensure(back == p, || format!("expand(contract({p})) = {back}"))?;
        }
        for m in labeled_motzkin_paths(n, Floor::Ground) {
            let back = contract_dyck(&expand_motzkin(&m).unwrap()).unwrap();
            ensure(back == m, || format!("contract(expand({}))", m.path()))?;
        }
    }

    for n in 0..=8 {
        let decorated = choice_motzkin_paths(n);
        let mut image = HashSet::new();
        for c in &decorated {
            let s = to_schroder(c).unwrap();
            ensure(is_sch_even(&s), || format!("{s} not in SCH_even"))?;
            ensure(&from_schroder(&s).unwrap() == c, || format!("from(to(.)) at {s}"))?;
            image.insert(s);
        }
        ensure(image.len() == decorated.len(), || format!("to_schroder not injective, n={n}"))?;
        let target: HashSet<_> = enumerate_paths(Flavor::Schroder, n).filter(is_sch_even).collect();
        ensure(image == target, || format!("image != SCH_even({n})"))?;
    }

    for n in 0..=6 {
        for s in enumerate_paths(Flavor::Schroder, n) {
            if !has_even_peak(&s) {
                let t = odd_h_to_peaks(&s).unwrap();
                ensure(is_sch_even(&t), || format!("{s} -> {t} not in SCH_even"))?;
                ensure(peaks_to_odd_h(&t).unwrap() == s, || format!("inverse at {s}"))?;
            }
            if is_sch_even(&s) {
                let t = peaks_to_odd_h(&s).unwrap();
                ensure(odd_h_to_peaks(&t).unwrap() == s, || format!("forward at {s}"))?;
            }
        }
    }
    for n in 0..=8 {
        let (a, b) = (count_no_even_peaks(n), count_sch_even_enumerated(n));
        ensure(a == b, || format!("n={n}: no-even-peaks {a} vs SCH_even {b}"))?;
    }
    Ok(())
}

fn catalan(n: u64) -> BigUint {
    let mut c = BigUint::from(1u8);
    for k in 0..n {
        c = c * BigUint::from(2 * (2 * k + 1)) / BigUint::from(k + 2);
    }
    c
}

/// NC_0, NC_1, NC_3 against their Motzkin weight systems.
fn small_k_cross_checks() -> Check {
    let motzkin = [1u64, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798];
    let (w0, w1, w3) = (nc0_weights::<Rational>(), nc1_weights::<Rational>(), nc3_weights::<Rational>());
    for n in 0..=11 {
        let nc0 = count_nc(0, n).map_err(|e| e.to_string())?;
        ensure(nc0 == motzkin[n], || format!("NC_0({n}) = {nc0}"))?;
        ensure(weighted_sum(Flavor::Motzkin, n, &w0).unwrap() == int(nc0), || {
            format!("Mot_{n}(1,1)")
        })?;
        let nc1 = count_nc(1, n).map_err(|e| e.to_string())?;
        ensure(BigUint::from(nc1) == catalan(n as u64), || format!("NC_1({n}) = {nc1}"))?;
        ensure(weighted_sum(Flavor::Motzkin, n, &w1).unwrap() == int(nc1), || {
            format!("Mot_{n}((1,2,2..),(1,1..))")
        })?;
        let nc3 = count_nc(3, n).map_err(|e| e.to_string())?;
        let m3 = weighted_sum(Flavor::Motzkin, n, &w3).unwrap();
        ensure(m3 == int(nc3), || format!("NC_3({n}) = {nc3} vs {m3}"))?;
    }
    Ok(())
}

/// Integer coefficients from non-integer weights.
fn integrality_witness() -> Check {
    let j = j_expand(&fib2_fraction(), 30);
    ensure(j.is_integral(), || format!("non-integer coefficient in {:?}", j.coeffs()))?;
    ensure(j == gf_nc2(30), || "J(x; b, lambda) != gf".into())?;
    for n in 2..=30 {
        ensure(!weight_b(n).is_integer() && !weight_lambda(n).is_integer(), || {
            format!("weights at {n} are integers")
        })?;
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("1 #NC_2(n) = Mot_n(b,lambda), n <= 12", main_identity),
        ("2 generating function coefficients 0..12", generating_function),
        ("3 explicit S-fraction and S(x;d) = gf to order 30", explicit_s_fraction),
        ("4 d-identities n <= 50, Catalan identity m <= 40", d_identities),
        ("5 S-to-J contraction and weight transport", contraction),
        ("6 R-ladder M=8, N=30", r_ladder),
        ("7 identity chain 1 <= n <= 10", identity_chain),
        ("8 bijection round trips", bijections),
        ("9 NC_0 / NC_1 / NC_3 cross-checks n <= 11", small_k_cross_checks),
        ("10 integrality of J(x; b, lambda) to order 30", integrality_witness),
    ];
    let mut failures = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(()) => println!("PASS  {name}"),
            Err(why) => {
                println!("FAIL  {name}: {why}");
                failures.push(name);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
