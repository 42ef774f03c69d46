use crate::{CliError, CliResult, Global, Mode, Ring, Source};
use padic_automata::automaton::{from_json, Automaton, BuildOptions, DiagonalSpec};
use padic_automata::poly::{
    parse, parse_univariate, variable_names, CurveSpec, MultiPoly, UniLaurent,
};
use padic_automata::{Error, RingSpec};
use std::path::Path;

pub enum Input {
    Curve(CurveSpec),
    Diagonal(DiagonalSpec, RingSpec),
}

pub fn ring(r: &Ring) -> CliResult<RingSpec> {
    Ok(RingSpec::new(r.p, r.alpha)?)
}

pub fn options(g: &Global) -> CliResult<BuildOptions> {
    if g.state_budget == 0 || g.monomial_budget == 0 || g.orbit_budget == 0 || g.lattice_budget == 0
    {
        return Err(CliError::Usage("budgets must be positive".into()));
    }
    Ok(BuildOptions {
        state_budget: g.state_budget,
        monomial_budget: g.monomial_budget,
        keep_keys: true,
        workers: g.workers,
    })
}

/// Parses `num` and `den` with the smallest variable set (from `min_vars`) that covers both.
fn parse_pair(
    num: &str,
    den: &str,
    nvars: Option<usize>,
    min_vars: usize,
    m: u64,
) -> CliResult<(MultiPoly, MultiPoly)> {
    let attempt = |n: usize| -> Result<(MultiPoly, MultiPoly), Error> {
        let vars = variable_names(n);
        Ok((parse(num, &vars, m)?, parse(den, &vars, m)?))
    };
    if let Some(n) = nvars {
        if !(2..=9).contains(&n) {
            return Err(CliError::Usage("--nvars must be between 2 and 9".into()));
        }
        return Ok(attempt(n)?);
    }
    let mut last = None;
    for n in min_vars..=9 {
        match attempt(n) {
            Ok(pair) => return Ok(pair),
            Err(e @ Error::UnknownVariable { .. }) => last = Some(e),
            Err(e) => return Err(e.into()),
        }
    }
    Err(last.expect("at least one attempt").into())
}

pub fn diagonal(
    num: &str,
    den: &str,
    nvars: Option<usize>,
    min_vars: usize,
    ring: RingSpec,
) -> CliResult<DiagonalSpec> {
    let (n, d) = parse_pair(num, den, nvars, min_vars, ring.modulus)?;
    Ok(DiagonalSpec::new(&n, &d, &ring)?)
}

pub fn source(s: &Source) -> CliResult<Input> {
    let ring = ring(&s.ring)?;
    match s.mode {
        Mode::Algebraic => {
            let poly = s
                .poly
                .as_deref()
                .ok_or_else(|| CliError::Usage("algebraic mode needs --poly".into()))?;
            Ok(Input::Curve(CurveSpec::parse(poly, ring)?))
        }
        Mode::Diagonal | Mode::Multivariate => {
            let (Some(num), Some(den)) = (s.num.as_deref(), s.den.as_deref()) else {
                return Err(CliError::Usage(
                    "diagonal modes need --num and --den".into(),
                ));
            };
            let min_vars = if s.mode == Mode::Multivariate { 3 } else { 2 };
            Ok(Input::Diagonal(
                diagonal(num, den, s.nvars, min_vars, ring)?,
                ring,
            ))
        }
    }
}

pub fn uni(expr: &str, m: u64) -> CliResult<UniLaurent> {
    Ok(parse_univariate(expr, m)?.to_univariate())
}

pub fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn write(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load(path: &Path) -> CliResult<Automaton> {
    Ok(from_json(&read(path)?)?)
}
