//! Named weight systems and inline sequences such as `1,2,3,3...`.

use std::str::FromStr;

use ncmotzkin::exactnum::{
    alpha_beta_weights, d_sequence, fib2_weights, nc0_weights, nc1_weights, nc3_weights,
    Sequence, WeightSystem,
};
use ncmotzkin::{Rational, RationalSequence, Weights};

pub const MOTZKIN_NAMES: &str = "fib2, alpha-beta, nc0, nc1, nc3";
pub const DYCK_NAMES: &str = "d, ones";

/// Comma separated rationals. A trailing `...` repeats the last entry
/// forever; otherwise the sequence continues with zeros.
pub fn parse_sequence(text: &str) -> Result<RationalSequence, String> {
    let (body, repeat) = match text.trim().strip_suffix("...") {
        Some(b) => (b, true),
        None => (text.trim(), false),
    };
    let mut values = body
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| Rational::from_str(s).map_err(|_| format!("not a rational: {s:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    if values.is_empty() {
        return Err(format!("empty sequence {text:?}"));
    }
    if !repeat {
        values.push(Rational::from_integer(0.into()));
    }
    Ok(Sequence::eventually_constant(values))
}

pub fn named_motzkin(name: &str) -> Result<Weights, String> {
    match name {
        "fib2" => Ok(fib2_weights()),
        "alpha-beta" => Ok(alpha_beta_weights()),
        "nc0" => Ok(nc0_weights()),
        "nc1" => Ok(nc1_weights()),
        "nc3" => Ok(nc3_weights()),
        other => Err(format!("unknown Motzkin weights {other:?} (known: {MOTZKIN_NAMES})")),
    }
}

pub fn named_dyck(name: &str) -> Result<RationalSequence, String> {
    match name {
        "d" => Ok(d_sequence()),
        "ones" => Ok(Sequence::ones()),
        other => Err(format!("unknown Dyck weights {other:?} (known: {DYCK_NAMES})")),
    }
}

/// Motzkin weights from a name or from inline `--h` / `--down` sequences.
pub fn motzkin_weights(
    name: Option<&str>,
    h: Option<&str>,
    down: Option<&str>,
) -> Result<Weights, String> {
    match (name, h, down) {
        (Some(n), None, None) => named_motzkin(n),
        (None, Some(h), Some(d)) => Ok(WeightSystem::motzkin(parse_sequence(h)?, parse_sequence(d)?)),
        (None, None, None) => named_motzkin("fib2"),
        _ => Err("give either --weights or both --h and --down".into()),
    }
}

pub fn dyck_sequence(name: Option<&str>, coeffs: Option<&str>) -> Result<RationalSequence, String> {
    match (name, coeffs) {
        (Some(n), None) => named_dyck(n),
        (None, Some(c)) => parse_sequence(c),
        (None, None) => named_dyck("d"),
        _ => Err("give either --weights or --coeffs".into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ncmotzkin::exactnum::rat;

    #[test]
    fn inline_sequences() {
        let s = parse_sequence("1,2,3,3...").unwrap();
        assert_eq!(s.take(6), [1, 2, 3, 3, 3, 3].map(|x| rat(x, 1)).to_vec());
        let s = parse_sequence("1/2, -5/3").unwrap();
        assert_eq!(s.take(4), vec![rat(1, 2), rat(-5, 3), rat(0, 1), rat(0, 1)]);
        assert!(parse_sequence("1,x").is_err());
        assert!(parse_sequence("...").is_err());
    }

    #[test]
    fn names() {
        assert!(named_motzkin("fib2").is_ok());
        assert!(named_motzkin("d").is_err());
        assert!(named_dyck("d").is_ok());
        assert!(motzkin_weights(Some("fib2"), Some("1"), None).is_err());
    }
}
