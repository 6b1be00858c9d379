//! Line-based input formats for rings and semigroups.
//!
//! Ring files:
//! ```text
//! field 32003
//! xvars x1 x2
//! yvars y1
//! ideal
//! x1*y1^2
//! 3*x1^2 - x2^2
//! end
//! ```
//!
//! Semigroup files:
//! ```text
//! ambient 2
//! xgens (2,0) (1,1) (0,2)
//! ygens
//! ```

use bigraded::semigroup::AffineSemigroup;
use bigraded::{Error, PolyRing, Polynomial, PrimeField, Result, RingPresentation};
use std::collections::HashMap;
use std::sync::Arc;

fn perr(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

/// Parse one polynomial in the given ring. `line` is used for error
/// positions.
pub fn parse_polynomial(
    ring: &PolyRing,
    vars: &HashMap<String, usize>,
    text: &str,
    line: usize,
) -> Result<Polynomial> {
    let bytes: Vec<char> = text.chars().collect();
    let mut pos = 0usize;
    let mut terms: Vec<(bigraded::Monomial, i64)> = vec![];

    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_whitespace() {
            *pos += 1;
        }
    };

    let read_int = |pos: &mut usize| -> Option<i64> {
        let start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        (*pos > start).then(|| bytes[start..*pos].iter().collect::<String>().parse().unwrap())
    };

    let read_name = |pos: &mut usize| -> Option<String> {
        let start = *pos;
        if *pos < bytes.len() && (bytes[*pos].is_ascii_alphabetic() || bytes[*pos] == '_') {
            *pos += 1;
            while *pos < bytes.len() && (bytes[*pos].is_ascii_alphanumeric() || bytes[*pos] == '_')
            {
                *pos += 1;
            }
            Some(bytes[start..*pos].iter().collect())
        } else {
            None
        }
    };

    let mut first = true;
    loop {
        skip_ws(&mut pos);
        if pos >= bytes.len() {
            if first {
                break;
            }
            return Err(perr(line, pos + 1, "dangling sign"));
        }
        // sign
        let mut sign = 1i64;
        if bytes[pos] == '+' || bytes[pos] == '-' {
            if bytes[pos] == '-' {
                sign = -1;
            }
            pos += 1;
        } else if !first {
            return Err(perr(line, pos + 1, format!("expected '+' or '-', got '{}'", bytes[pos])));
        }
        first = false;
        skip_ws(&mut pos);

        // factors separated by '*'
        let mut coeff: i64 = sign;
        let mut exps = vec![0u32; ring.nvars()];
        loop {
            skip_ws(&mut pos);
            if let Some(k) = read_int(&mut pos) {
                coeff = coeff.saturating_mul(k);
            } else if let Some(name) = read_name(&mut pos) {
                let v = *vars
                    .get(&name)
                    .ok_or_else(|| perr(line, pos, format!("unknown variable '{name}'")))?;
                let mut e = 1u32;
                skip_ws(&mut pos);
                if pos < bytes.len() && bytes[pos] == '^' {
                    pos += 1;
                    skip_ws(&mut pos);
                    e = read_int(&mut pos)
                        .ok_or_else(|| perr(line, pos + 1, "expected an exponent after '^'"))?
                        as u32;
                }
                exps[v] += e;
            } else {
                return Err(perr(
                    line,
                    pos + 1,
                    "expected a coefficient or a variable".to_string(),
                ));
            }
            skip_ws(&mut pos);
            if pos < bytes.len() && bytes[pos] == '*' {
                pos += 1;
                continue;
            }
            break;
        }
        terms.push((bigraded::Monomial::from_exps(exps), coeff));
        skip_ws(&mut pos);
        if pos >= bytes.len() {
            break;
        }
    }
    Ok(ring.polynomial(terms))
}

/// Parse a ring file into a presented bigraded ring.
pub fn parse_ring(text: &str) -> Result<Arc<RingPresentation>> {
    let mut field: Option<PrimeField> = None;
    let mut xvars: Vec<String> = vec![];
    let mut yvars: Vec<String> = vec![];
    let mut ideal_lines: Vec<(usize, String)> = vec![];
    let mut in_ideal = false;
    let mut ideal_closed = false;

    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if in_ideal {
            if line == "end" {
                in_ideal = false;
                ideal_closed = true;
            } else {
                ideal_lines.push((line_no, line.to_string()));
            }
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next().unwrap() {
            "field" => {
                let p: u64 = parts
                    .next()
                    .ok_or_else(|| perr(line_no, 7, "missing modulus"))?
                    .parse()
                    .map_err(|_| perr(line_no, 7, "modulus must be an integer"))?;
                field = Some(PrimeField::new(p)?);
            }
            "xvars" => xvars = parts.map(|s| s.to_string()).collect(),
            "yvars" => yvars = parts.map(|s| s.to_string()).collect(),
            "ideal" => in_ideal = true,
            other => {
                return Err(perr(line_no, 1, format!("unknown directive '{other}'")));
            }
        }
    }
    if in_ideal && !ideal_closed {
        return Err(perr(text.lines().count(), 1, "ideal block not closed with 'end'"));
    }

    let field = field.unwrap_or_else(PrimeField::default_field);
    let mut names = xvars.clone();
    names.extend(yvars.iter().cloned());
    let mut degrees = vec![bigraded::Bidegree::new(1, 0); xvars.len()];
    degrees.extend(vec![bigraded::Bidegree::new(0, 1); yvars.len()]);
    let ring = PolyRing::new(names.clone(), degrees, field, bigraded::TermOrder::DegRevLex);
    let vars: HashMap<String, usize> = names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.clone(), i))
        .collect();
    if vars.len() != names.len() {
        return Err(Error::InvalidInput("duplicate variable names".into()));
    }

    let mut relations = vec![];
    for (line_no, text) in &ideal_lines {
        let p = parse_polynomial(&ring, &vars, text, *line_no)?;
        if p.is_zero() {
            return Err(perr(*line_no, 1, "zero relation"));
        }
        ring.bidegree_of(&p)?;
        relations.push(p);
    }
    Ok(Arc::new(RingPresentation::new(ring, relations)?))
}

/// Canonical text form of a presented ring; `parse_ring` round-trips it.
pub fn serialize_ring(ring: &RingPresentation) -> String {
    let amb = ring.ambient();
    let n = ring.n();
    let mut out = format!("field {}\n", amb.field().modulus());
    out.push_str("xvars");
    for v in &amb.var_names()[..n] {
        out.push(' ');
        out.push_str(v);
    }
    out.push('\n');
    out.push_str("yvars");
    for v in &amb.var_names()[n..] {
        out.push(' ');
        out.push_str(v);
    }
    out.push('\n');
    out.push_str("ideal\n");
    for r in ring.relations() {
        out.push_str(&amb.poly_to_string(r));
        out.push('\n');
    }
    out.push_str("end\n");
    out
}

fn parse_vector(tok: &str, dim: usize, line_no: usize) -> Result<Vec<u32>> {
    let trimmed = tok
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| perr(line_no, 1, format!("expected (a,b,..) vector, got '{tok}'")))?;
    let coords: Vec<u32> = trimmed
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<u32>()
                .map_err(|_| perr(line_no, 1, format!("bad coordinate in '{tok}'")))
        })
        .collect::<Result<_>>()?;
    if coords.len() != dim {
        return Err(perr(
            line_no,
            1,
            format!("vector '{tok}' has {} coordinates, expected {dim}", coords.len()),
        ));
    }
    Ok(coords)
}

/// Parse a semigroup file.
pub fn parse_semigroup(text: &str) -> Result<AffineSemigroup> {
    let mut ambient: Option<usize> = None;
    let mut xgens: Vec<Vec<u32>> = vec![];
    let mut ygens: Vec<Vec<u32>> = vec![];
    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next().unwrap() {
            "ambient" => {
                ambient = Some(
                    parts
                        .next()
                        .ok_or_else(|| perr(line_no, 9, "missing dimension"))?
                        .parse()
                        .map_err(|_| perr(line_no, 9, "dimension must be an integer"))?,
                );
            }
            kind @ ("xgens" | "ygens") => {
                let dim = ambient
                    .ok_or_else(|| perr(line_no, 1, "'ambient <d>' must come first"))?;
                let target = if kind == "xgens" { &mut xgens } else { &mut ygens };
                if dim == 1 {
                    // allow bare integers in dimension 1
                    for tok in parts {
                        if tok.starts_with('(') {
                            target.push(parse_vector(tok, dim, line_no)?);
                        } else {
                            target.push(vec![tok.parse::<u32>().map_err(|_| {
                                perr(line_no, 1, format!("bad generator '{tok}'"))
                            })?]);
                        }
                    }
                } else {
                    for tok in parts {
                        target.push(parse_vector(tok, dim, line_no)?);
                    }
                }
            }
            other => return Err(perr(line_no, 1, format!("unknown directive '{other}'"))),
        }
    }
    let dim = ambient.ok_or_else(|| Error::InvalidInput("missing 'ambient' line".into()))?;
    AffineSemigroup::new(dim, xgens, ygens)
}

pub fn serialize_semigroup(s: &AffineSemigroup) -> String {
    let mut out = format!("ambient {}\n", s.ambient_dim);
    let fmt = |gens: &[Vec<u32>]| -> String {
        gens.iter()
            .map(|g| {
                format!(
                    "({})",
                    g.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
                )
            })
            .collect::<Vec<_>>()
            .join(" ")
    };
    out.push_str("xgens");
    if !s.x_generators.is_empty() {
        out.push(' ');
        out.push_str(&fmt(&s.x_generators));
    }
    out.push('\n');
    out.push_str("ygens");
    if !s.y_generators.is_empty() {
        out.push(' ');
        out.push_str(&fmt(&s.y_generators));
    }
    out.push('\n');
    out
}
