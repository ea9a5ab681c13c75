//! Verification suites behind `ncmotzkin verify`.

use std::fmt::Display;

use ncmotzkin::bijections::contract_dyck;
use ncmotzkin::contfrac::{contract_s_to_j, j_expand, qd_extract, r_ladder_check, s_expand};
use ncmotzkin::exactnum::{
    alpha_beta_weights, b_sequence, d_sequence, fib, fib2_weights, lambda_sequence, rat, weight_b,
    weight_d, weight_lambda, Sequence, WeightSystem,
};
use ncmotzkin::partitions::count_nc_bounded;
use ncmotzkin::paths::{count_sch_even, enumerate_paths, path_weight, weighted_sum, Flavor};
use ncmotzkin::series::gf_nc2;
use ncmotzkin::{JFraction, Rational, SFraction};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::limits::Limits;
use crate::report::{ReportRow, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Lemma22,
    Prop21,
    Thm24,
    Ladder,
    Chain,
    All,
}

/// One identity over one range; remembers its first counterexample.
struct Identity<'a> {
    suite: &'a str,
    name: String,
    range: String,
    checked: usize,
    counterexample: Option<(String, Rational, Rational)>,
}

impl<'a> Identity<'a> {
    fn new(suite: &'a str, name: impl Into<String>, range: impl Into<String>) -> Self {
        Identity {
            suite,
            name: name.into(),
            range: range.into(),
            checked: 0,
            counterexample: None,
        }
    }

    fn check(&mut self, at: impl Display, lhs: Rational, rhs: Rational) {
        self.checked += 1;
        if self.counterexample.is_none() && lhs != rhs {
            self.counterexample = Some((at.to_string(), lhs, rhs));
        }
    }

    fn row(self) -> ReportRow {
        let mut row = ReportRow::ok(self.checked)
            .with("suite", self.suite)
            .with("identity", self.name)
            .with("range", self.range);
        if let Some((at, lhs, rhs)) = self.counterexample {
            row = row.with("at", at).with("lhs", lhs).with("rhs", rhs);
            row.status = Status::Mismatch;
        }
        row
    }
}

fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

fn fib_int(m: i64) -> BigInt {
    BigInt::from(fib(m).expect("m >= -1"))
}

fn lemma22(max_n: usize) -> Vec<ReportRow> {
    let s = "lemma22";
    let mut b = Identity::new(s, "b_n = d_(2n-1) + d_(2n), d_(-1) = 0", format!("0 <= n <= {max_n}"));
    let mut l = Identity::new(s, "lambda_n = d_(2n) d_(2n+1)", format!("0 <= n <= {max_n}"));
    let mut three = Identity::new(s, "1/d_(2n-1) + d_(2n+1) = 3", format!("1 <= n <= {max_n}"));
    let mut cat = Identity::new(
        s,
        "F_m^2 - F_(m+i) F_(m-i) = (-1)^(m-i) F_i^2",
        format!("0 <= i <= m <= {max_n}"),
    );
    for n in 0..=max_n {
        let prev = if n == 0 { rat(0, 1) } else { weight_d(2 * n - 1) };
        b.check(format!("n={n}"), weight_b(n), prev + weight_d(2 * n));
        l.check(format!("n={n}"), weight_lambda(n), weight_d(2 * n) * weight_d(2 * n + 1));
        if n >= 1 {
            three.check(
                format!("n={n}"),
                weight_d(2 * n - 1).recip() + weight_d(2 * n + 1),
                rat(3, 1),
            );
        }
    }
    for m in 0..=max_n as i64 {
        for i in 0..=m {
            let fm = fib_int(m);
            let lhs = &fm * &fm - fib_int(m + i) * fib_int(m - i);
            let fi = fib_int(i);
            let sq = &fi * &fi;
            let rhs = if (m - i) % 2 == 0 { sq } else { -sq };
            cat.check(format!("m={m},i={i}"), int(lhs), int(rhs));
        }
    }
    vec![b.row(), l.row(), three.row(), cat.row()]
}

fn prop21(max_n: usize, limits: &Limits) -> Vec<ReportRow> {
    let s = "prop21";
    let mut fractions: Vec<(String, Sequence<Rational>)> =
        vec![("d".into(), d_sequence()), ("ones".into(), Sequence::ones())];
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for k in 0..20 {
        let values: Vec<Rational> = (0..=max_n + 1)
            .map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=7)))
            .collect();
        fractions.push((format!("random#{k}"), Sequence::eventually_constant(values)));
    }
    let mut series = Identity::new(
        s,
        "S(x; c) = J(x; contract(c))",
        format!("order {max_n}, c in d, ones, 20 seeded random"),
    );
    for (label, c) in &fractions {
        let f = SFraction::new(c.clone());
        let lhs = s_expand(&f, max_n);
        let rhs = j_expand(&contract_s_to_j(&f), max_n);
        for n in 0..=max_n {
            series.check(format!("{label}, x^{n}"), lhs.coeff(n).clone(), rhs.coeff(n).clone());
        }
    }

    let mut contracted = Identity::new(s, "contract(d) = (b, lambda)", format!("0 <= n <= {max_n}"));
    let j = contract_s_to_j(&SFraction::new(d_sequence()));
    for n in 0..=max_n {
        contracted.check(format!("diagonal n={n}"), j.diagonal.get(n), weight_b(n));
        contracted.check(format!("subdiagonal n={n}"), j.subdiagonal.get(n), weight_lambda(n));
    }

    let top = max_n.min(limits.paths / 2);
    let mut transport = Identity::new(
        s,
        "Dyck weight under d = weight transported to the contracted path",
        format!("Dyck semi-length <= {top}"),
    );
    let d = d_sequence::<Rational>();
    let w = WeightSystem::dyck(d.clone());
    for n in 0..=top {
        for p in enumerate_paths(Flavor::Dyck, n) {
            let m = contract_dyck(&p).expect("Dyck input");
            transport.check(&p, path_weight(&p, &w).expect("Dyck weights"), m.transported_weight(&d));
        }
    }
    vec![series.row(), contracted.row(), transport.row()]
}

fn thm24(max_n: usize) -> Vec<ReportRow> {
    let s = "thm24";
    let gf = gf_nc2::<Rational>(max_n);
    let mut sfrac = Identity::new(s, "S(x; d) = 3/2 - 1/2 sqrt((1-5x)/(1-x))", format!("order {max_n}"));
    let lhs = s_expand(&SFraction::new(d_sequence()), max_n);
    for n in 0..=max_n {
        sfrac.check(format!("x^{n}"), lhs.coeff(n).clone(), gf.coeff(n).clone());
    }
    let mut jfrac = Identity::new(s, "J(x; b, lambda) = 3/2 - 1/2 sqrt((1-5x)/(1-x))", format!("order {max_n}"));
    let lhs = j_expand(&JFraction::new(b_sequence(), lambda_sequence()), max_n);
    for n in 0..=max_n {
        jfrac.check(format!("x^{n}"), lhs.coeff(n).clone(), gf.coeff(n).clone());
    }
    let mut extract = Identity::new(s, "S-fraction coefficients of the series = d", format!("c_0 .. c_{}", max_n as i64 - 1));
    let wide = gf_nc2::<Rational>(max_n + 1);
    match qd_extract(&wide, max_n) {
        Ok(cs) => {
            for (m, c) in cs.into_iter().enumerate() {
                extract.check(format!("c_{m}"), c, weight_d(m));
            }
        }
        Err(e) => extract.check(e, rat(0, 1), rat(1, 1)),
    }
    vec![sfrac.row(), jfrac.row(), extract.row()]
}

fn ladder(max_n: usize) -> Vec<ReportRow> {
    let s = "ladder";
    let m = max_n.max(1);
    let order = (2 * max_n).max(1);
    let check = r_ladder_check(m, order);
    let mut rel = Identity::new(s, "R_m (1 - x R_(m+1)) = d_m", format!("-1 <= m <= {m}, order {order}"));
    match check.failed_at {
        Some(at) => rel.check(format!("m={at}"), rat(0, 1), rat(1, 1)),
        None => rel.check("all", rat(0, 1), rat(0, 1)),
    }
    let mut constants = Identity::new(s, "R_m(0) = d_m, d_(-1) = 1", format!("-1 <= m <= {m}"));
    for (i, c) in check.constant_terms.iter().enumerate() {
        let expected = if i == 0 { rat(1, 1) } else { weight_d(i - 1) };
        constants.check(format!("m={}", i as i64 - 1), c.clone(), expected);
    }
    vec![rel.row(), constants.row()]
}

fn chain(max_n: usize, limits: &Limits) -> Result<Vec<ReportRow>, String> {
    Limits::check("partition size n", max_n, limits.partitions)?;
    let s = "chain";
    let range = format!("1 <= n <= {max_n}");
    let mut legs = [
        Identity::new(s, "#NC_2(n) = #SCH_even(n-1)", range.clone()),
        Identity::new(s, "#SCH_even(n-1) = Mot_(n-1)(alpha, beta)", range.clone()),
        Identity::new(s, "Mot_(n-1)(alpha, beta) = Dyck_n(d)", range.clone()),
        Identity::new(s, "Dyck_n(d) = Mot_n(b, lambda)", range),
    ];
    let dyck = s_expand(&SFraction::new(d_sequence()), max_n);
    let (ab, fib2) = (alpha_beta_weights::<Rational>(), fib2_weights::<Rational>());
    for n in 1..=max_n {
        let nc = int(count_nc_bounded(2, n, limits.partitions).map_err(|e| e.to_string())?);
        let sch = int(count_sch_even(n - 1));
        let mot_ab = weighted_sum(Flavor::Motzkin, n - 1, &ab).expect("Motzkin weights");
        let dy = dyck.coeff(n).clone();
        let mot = weighted_sum(Flavor::Motzkin, n, &fib2).expect("Motzkin weights");
        let at = format!("n={n}");
        legs[0].check(&at, nc, sch.clone());
        legs[1].check(&at, sch, mot_ab.clone());
        legs[2].check(&at, mot_ab, dy.clone());
        legs[3].check(&at, dy, mot);
    }
    Ok(legs.into_iter().map(Identity::row).collect())
}

/// Runs a suite. `Err` means the request exceeded a bound.
pub fn run(suite: Suite, max_n: usize, limits: &Limits) -> Result<Vec<ReportRow>, String> {
    let order_needed = if matches!(suite, Suite::Thm24 | Suite::All) { max_n + 1 } else { 2 * max_n };
    Limits::check("series order", order_needed, limits.order)?;
    Ok(match suite {
        Suite::Lemma22 => lemma22(max_n),
        Suite::Prop21 => prop21(max_n, limits),
        Suite::Thm24 => thm24(max_n),
        Suite::Ladder => ladder(max_n),
        Suite::Chain => chain(max_n, limits)?,
        Suite::All => {
            // check every bound before doing any work
            Limits::check("partition size n", max_n, limits.partitions)?;
            let mut rows = lemma22(max_n);
            rows.extend(prop21(max_n, limits));
            rows.extend(thm24(max_n));
            rows.extend(ladder(max_n));
            rows.extend(chain(max_n, limits)?);
            rows
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_ok(rows: &[ReportRow]) -> bool {
        rows.iter().all(|r| r.status == Status::Ok)
    }

    #[test]
    fn suites_pass_at_small_sizes() {
        let limits = Limits::default();
        for suite in [Suite::Lemma22, Suite::Prop21, Suite::Thm24, Suite::Ladder, Suite::Chain] {
            let rows = run(suite, 6, &limits).unwrap();
            assert!(all_ok(&rows), "{suite:?}: {rows:?}");
        }
        assert!(all_ok(&run(Suite::All, 0, &limits).unwrap()));
    }

    #[test]
    fn identity_records_first_counterexample() {
        let mut id = Identity::new("t", "x = y", "n <= 2");
        id.check("n=0", rat(1, 1), rat(1, 1));
        id.check("n=1", rat(1, 1), rat(2, 1));
        id.check("n=2", rat(5, 1), rat(7, 1));
        let row = id.row();
        assert_eq!(row.status, Status::Mismatch);
        assert!(row.values.iter().any(|(k, v)| k == "at" && *v == "n=1".into()));
    }

    #[test]
    fn chain_respects_partition_bound() {
        let limits = Limits { partitions: 5, ..Limits::default() };
        assert!(run(Suite::Chain, 6, &limits).is_err());
    }
}
