use std::str::FromStr;

use num_bigint::BigInt;

use super::{Monomial, PolyError, Polynomial, VarKind, VariableId};

fn parse_var(tok: &str) -> Result<(VariableId, u32), PolyError> {
    let bad = || PolyError::Parse(tok.to_string());
    let (body, exp) = match tok.split_once('^') {
        Some((b, e)) => (b, e.parse::<u32>().map_err(|_| bad())?),
        None => (tok, 1),
    };
    let mut parts = body.split('_');
    let kind = match parts.next() {
        Some("t") => VarKind::Tau,
        Some("c") => VarKind::C,
        Some("u") => VarKind::U,
        _ => return Err(bad()),
    };
    let i: usize = parts.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
    let j: usize = parts.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
    if parts.next().is_some() || exp == 0 || i == 0 || j == 0 || i > super::MAX_INDEX || j > super::MAX_INDEX {
        return Err(bad());
    }
    if kind != VarKind::U && i >= j {
        return Err(bad());
    }
    Ok((VariableId::new(kind, i, j), exp))
}

fn parse_term(tok: &str) -> Result<(Monomial, BigInt), PolyError> {
    let mut coeff = BigInt::from(1);
    let mut pairs = Vec::new();
    for (k, factor) in tok.split('*').enumerate() {
        if k == 0 && factor.bytes().all(|b| b.is_ascii_digit()) && !factor.is_empty() {
            coeff = factor.parse().map_err(|_| PolyError::Parse(tok.to_string()))?;
        } else {
            pairs.push(parse_var(factor)?);
        }
    }
    Ok((Monomial::from_pairs(pairs), coeff))
}

/// Parses the canonical string form (and any reordering of it).
impl FromStr for Polynomial {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(PolyError::Parse(s));
        }
        let mut terms = Vec::new();
        let mut sign = 1;
        let mut start = 0;
        let bytes = s.as_bytes();
        let mut flush = |from: usize, to: usize, sign: i32| -> Result<(), PolyError> {
            let (m, c) = parse_term(&s[from..to])?;
            terms.push((m, if sign < 0 { -c } else { c }));
            Ok(())
        };
        if bytes[0] == b'-' || bytes[0] == b'+' {
            sign = if bytes[0] == b'-' { -1 } else { 1 };
            start = 1;
        }
        let mut k = start;
        while k < bytes.len() {
            if bytes[k] == b'+' || bytes[k] == b'-' {
                if k == start {
                    return Err(PolyError::Parse(s.clone()));
                }
                flush(start, k, sign)?;
                sign = if bytes[k] == b'-' { -1 } else { 1 };
                start = k + 1;
            }
            k += 1;
        }
        if start >= bytes.len() {
            return Err(PolyError::Parse(s.clone()));
        }
        flush(start, bytes.len(), sign)?;
        Ok(Polynomial::from_terms(terms))
    }
}
