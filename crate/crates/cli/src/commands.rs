use crate::input::{self, Input};
use crate::report::Report;
use crate::{check, Cli, CliError, CliResult, Command, Format, OracleCommand, Source};
use padic_automata::analysis::{
    bound_report, diagonal_bound_report, factor_fp, orbit_zero, period_rational, residue_stats,
    univariate_orbit, FpFactorization,
};
use padic_automata::automaton::{
    build_algebraic, build_diagonal, build_diagonal_direct, minimize, minimize_hopcroft, to_dot,
    to_json, Automaton, StateKey,
};
use padic_automata::numeration::{initial_digits, make_q, BoxKind, DigitBox, Section, ZTable};
use padic_automata::oracle::{diagonal_expand_with_budget, kernel_prefixes, series_solve};
use padic_automata::poly::CurveSpec;
use padic_automata::RingSpec;
use std::path::Path;

type Outcome = std::result::Result<Report, (Option<Report>, CliError)>;

pub fn run(cli: &Cli) -> Outcome {
    if let Command::Check {
        source,
        terms,
        words,
        seed,
        automaton,
    } = &cli.command
    {
        return check::run(cli, source, *terms, *words, *seed, automaton.as_deref());
    }
    dispatch(cli).map_err(|e| (None, e))
}

fn dispatch(cli: &Cli) -> CliResult<Report> {
    match &cli.command {
        Command::Build {
            source,
            out,
            dot,
            minimize,
            direct,
            hopcroft,
        } => build(
            cli,
            source,
            out.as_deref(),
            dot.as_deref(),
            *minimize,
            *direct,
            *hopcroft,
        ),
        Command::Minimize {
            automaton,
            out,
            hopcroft,
        } => {
            let a = input::load(automaton)?;
            let m = minimizer(*hopcroft)(&a);
            if let Some(path) = out {
                input::write(path, &to_json(&m))?;
            }
            let mut r = Report::new("minimize");
            r.field("states", a.len()).field("minimized", m.len());
            Ok(r)
        }
        Command::Eval { automaton, n } => {
            let a = input::load(automaton)?;
            let values: Vec<u64> = n.iter().map(|&k| a.eval(k)).collect();
            let mut r = Report::new("eval");
            for v in &values {
                r.line(v.to_string());
            }
            r.hidden_list("n", n).hidden_list("values", &values);
            Ok(r)
        }
        Command::Export {
            automaton,
            format,
            out,
        } => {
            let a = input::load(automaton)?;
            let text = match format {
                Format::Json => to_json(&a),
                Format::Dot => to_dot(&a),
            };
            let mut r = Report::new("export");
            match out {
                Some(path) => {
                    input::write(path, &text)?;
                    r.field("written", path.display());
                }
                None => {
                    r.line(text.trim_end());
                    r.hidden("document", text);
                }
            }
            Ok(r)
        }
        Command::Orbit { poly, r, s, ring } => {
            let ring = input::ring(ring)?;
            match (poly, r, s) {
                (Some(poly), None, None) => curve_orbit(cli, &CurveSpec::parse(poly, ring)?),
                (None, Some(r), Some(s)) => uni_orbit(r, s, ring),
                _ => Err(CliError::Usage(
                    "orbit needs either --poly, or both --R and --S".into(),
                )),
            }
        }
        Command::Period { r, ring } => period(r, input::ring(ring)?),
        Command::Bounds { source } => bounds(source),
        Command::Stats {
            automaton,
            poly,
            num,
            den,
            nvars,
            p,
            alpha,
        } => {
            let a = match automaton {
                Some(path) => input::load(path)?,
                None => {
                    let (Some(p), Some(alpha)) = (p, alpha) else {
                        return Err(CliError::Usage(
                            "stats needs --automaton, or --p and --alpha".into(),
                        ));
                    };
                    let ring = RingSpec::new(*p, *alpha)?;
                    let opts = input::options(&cli.global)?;
                    match (poly, num, den) {
                        (Some(poly), None, None) => {
                            build_algebraic(&CurveSpec::parse(poly, ring)?, &opts)?
                        }
                        (None, Some(num), Some(den)) => build_diagonal(
                            &input::diagonal(num, den, *nvars, 2, ring)?,
                            &ring,
                            &opts,
                        )?,
                        _ => {
                            return Err(CliError::Usage(
                                "stats needs --poly, or --num and --den".into(),
                            ))
                        }
                    }
                }
            };
            Ok(stats(&a))
        }
        Command::Oracle { which } => oracle(cli, which),
        Command::Factor { r, p } => {
            let ring = RingSpec::new(*p, 1)?;
            let f = factor_fp(&input::uni(r, ring.modulus)?, *p)?;
            let mut rep = Report::new("factor");
            rep.field("factorization", format_factorization(&f))
                .field("unit", f.c)
                .field("z_exponent", f.e0)
                .list("factors", f.factors.iter().map(|(g, _)| dense(g)))
                .list("multiplicities", f.factors.iter().map(|(_, e)| e))
                .field("seed", format!("{:#x}", f.seed));
            Ok(rep)
        }
        Command::Check { .. } => unreachable!("handled in run"),
    }
}

pub fn minimizer(hopcroft: bool) -> fn(&Automaton) -> Automaton {
    if hopcroft {
        minimize_hopcroft
    } else {
        minimize
    }
}

pub fn build_input(cli: &Cli, input: &Input, direct: bool) -> CliResult<Automaton> {
    let opts = input::options(&cli.global)?;
    Ok(match input {
        Input::Curve(c) => build_algebraic(c, &opts)?,
        Input::Diagonal(spec, ring) if direct => build_diagonal_direct(spec, ring, &opts)?,
        Input::Diagonal(spec, ring) => build_diagonal(spec, ring, &opts)?,
    })
}

fn build(
    cli: &Cli,
    source: &Source,
    out: Option<&Path>,
    dot: Option<&Path>,
    write_minimized: bool,
    direct: bool,
    hopcroft: bool,
) -> CliResult<Report> {
    let input = input::source(source)?;
    if direct && matches!(input, Input::Curve(_)) {
        return Err(CliError::Usage("--direct applies to diagonal modes".into()));
    }
    let a = build_input(cli, &input, direct)?;
    let m = minimizer(hopcroft)(&a);
    let mut r = Report::new("build");
    r.field("source", &a.source)
        .field("p", a.ring.p)
        .field("alpha", a.ring.alpha)
        .field("states", a.len())
        .field("minimized", m.len())
        .field("depth", a.depth());
    match &input {
        Input::Curve(c) => {
            r.field("h", c.h).field("d", c.d);
            match bound_report(c) {
                Ok(b) => {
                    let vbox = DigitBox::new(BoxKind::V, c.h, c.d, c.ring.alpha);
                    let outside = a.keys.as_ref().map_or(0, |keys| {
                        keys.iter()
                            .filter(|k| matches!(k, StateKey::Digits(t) if !vbox.contains(t)))
                            .count()
                    });
                    r.field("u", b.u)
                        .field("transient_states", outside)
                        .field("p_pow_n", &b.p_pow_n)
                        .field("bound", &b.total);
                }
                Err(e) => {
                    r.field("bound", format!("unavailable ({e})"));
                }
            }
        }
        Input::Diagonal(spec, ring) => match diagonal_bound_report(spec, ring) {
            Ok(b) => {
                r.field("p_pow_m", &b.p_pow_m);
                if let Some(total) = b.bivariate.and_then(|bi| bi.total) {
                    r.field("bound", total);
                }
            }
            Err(e) => {
                r.field("bound", format!("unavailable ({e})"));
            }
        },
    }
    let stored = if write_minimized { &m } else { &a };
    if let Some(path) = out {
        input::write(path, &to_json(stored))?;
    }
    if let Some(path) = dot {
        input::write(path, &to_dot(stored))?;
    }
    Ok(r)
}

fn curve_orbit(cli: &Cli, c: &CurveSpec) -> CliResult<Report> {
    let zt = ZTable::new(&make_q(c), &c.ring, Section::Algebraic);
    let o = orbit_zero(&initial_digits(c), &zt, cli.global.orbit_budget)?;
    let mut r = Report::new("orbit");
    r.field("orbit_size", o.size())
        .field("transient", o.transient)
        .field("period", o.period);
    if let Ok(b) = bound_report(c) {
        r.field("bound_informational", b.orbit_bound);
    }
    Ok(r)
}

fn uni_orbit(r: &str, s: &str, ring: RingSpec) -> CliResult<Report> {
    let o = univariate_orbit(
        &input::uni(s, ring.modulus)?,
        &input::uni(r, ring.modulus)?,
        &ring,
    )?;
    let mut rep = Report::new("orbit");
    rep.field("orbit_size", o.record.size())
        .field("transient", o.record.transient)
        .field("period", o.record.period)
        .field("transient_bound", o.t)
        .field("period_bound", o.ell)
        .field("bound", o.bound())
        .field("factorization", format_factorization(&o.factorization));
    Ok(rep)
}

fn period(r: &str, ring: RingSpec) -> CliResult<Report> {
    let rep = period_rational(&input::uni(r, ring.modulus)?, &ring)?;
    let mut out = Report::new("period");
    out.line(format!(
        "empirical: {}, bound: {} | {}",
        rep.period_mod_palpha, rep.bound_lifted, rep.bound_combined_t
    ))
    .hidden("empirical", rep.period_mod_palpha)
    .hidden("bound_lifted", rep.bound_lifted)
    .hidden("bound_combined_t", rep.bound_combined_t)
    .field("bound_combined", rep.bound_combined)
    .field("period_mod_p", rep.period_mod_p)
    .field("bound_mod_p", rep.bound_mod_p)
    .field("period_t_mod_p", rep.period_t_mod_p)
    .field("bound_t_mod_p", rep.bound_t_mod_p)
    .field("leading_zeros", rep.leading_zeros)
    .field("trailing_zeros", rep.trailing_zeros)
    .field("factorization", format_factorization(&rep.factorization))
    .field("seed", format!("{:#x}", rep.factorization.seed));
    Ok(out)
}

fn bounds(source: &Source) -> CliResult<Report> {
    let mut r = Report::new("bounds");
    match input::source(source)? {
        Input::Curve(c) => {
            let b = bound_report(&c)?;
            r.field("h", b.h)
                .field("d", b.d)
                .field("n", b.n)
                .field("dim_v", b.dim_v)
                .field("u", b.u)
                .field("u_l", b.u_l)
                .field("u_r", b.u_r)
                .field("u_t", b.u_t)
                .field("landau_l", b.landau_l)
                .field("landau_g", b.landau_g)
                .field("p_pow_n", &b.p_pow_n)
                .field("total", &b.total)
                .field("kernel_initial", &b.kernel_initial);
            if let Some(f) = &b.fields_bound {
                r.field("fields_bound", f);
            }
            r.field("orbit_bound_informational", &b.orbit_bound);
        }
        Input::Diagonal(spec, ring) => {
            let b = diagonal_bound_report(&spec, &ring)?;
            r.list("h", &b.h)
                .field("m", b.m)
                .field("p_pow_m", &b.p_pow_m);
            if let Some(bi) = b.bivariate {
                r.field("n", bi.n)
                    .field("u", bi.u)
                    .field("landau_l", bi.landau_l)
                    .field("p_pow_n", &bi.p_pow_n);
                match (bi.border, bi.total) {
                    (Some(border), Some(total)) => {
                        r.list("borders", border).field("total", total);
                    }
                    _ => {
                        r.field(
                            "total",
                            "unavailable (a border of the denominator is empty)",
                        );
                    }
                }
            }
        }
    }
    Ok(r)
}

fn stats(a: &Automaton) -> Report {
    let s = residue_stats(a);
    let (k, m) = s.attained_fraction();
    let (ki, _) = s.infinite_fraction();
    let mut r = Report::new("stats");
    r.field("states", a.len())
        .field("attained", format!("{k}/{m}"))
        .field("attained_infinitely", format!("{ki}/{m}"))
        .field(
            "attained_percent",
            format!("{:.2}", 100.0 * k as f64 / m as f64),
        )
        .field(
            "infinite_percent",
            format!("{:.2}", 100.0 * ki as f64 / m as f64),
        )
        .list("residues", &s.attained)
        .list("residues_infinitely", &s.attained_infinitely);
    r
}

fn oracle(cli: &Cli, which: &OracleCommand) -> CliResult<Report> {
    let mut r = Report::new("oracle");
    let coeffs = match which {
        OracleCommand::Series { poly, n, ring } => {
            let c = CurveSpec::parse(poly, input::ring(ring)?)?;
            let mut s = series_solve(&c, *n).coeffs;
            s.truncate(*n);
            s
        }
        OracleCommand::Diagonal {
            num,
            den,
            nvars,
            n,
            ring,
        } => {
            let ring = input::ring(ring)?;
            let spec = input::diagonal(num, den, *nvars, 2, ring)?;
            if *n == 0 {
                Vec::new()
            } else {
                diagonal_expand_with_budget(&spec, n - 1, &ring, cli.global.lattice_budget)?.coeffs
            }
        }
        OracleCommand::Kernel {
            poly,
            e_max,
            len,
            ring,
        } => {
            let ring = input::ring(ring)?;
            let c = CurveSpec::parse(poly, ring)?;
            let need = (ring.p as u128)
                .saturating_pow(*e_max)
                .saturating_mul(*len as u128);
            if need > cli.global.lattice_budget as u128 {
                return Err(padic_automata::Error::BudgetExceeded {
                    what: "series",
                    needed: need.min(u64::MAX as u128) as u64,
                    budget: cli.global.lattice_budget,
                }
                .into());
            }
            let seq = series_solve(&c, need as usize).coeffs;
            r.field(
                "kernel_prefixes",
                kernel_prefixes(&seq, ring.p, *e_max, *len)?,
            );
            return Ok(r);
        }
    };
    r.line(
        coeffs
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(" "),
    );
    r.hidden_list("coefficients", &coeffs);
    Ok(r)
}

/// Dense coefficients (lowest first) as a polynomial in `z`.
pub fn dense(c: &[u64]) -> String {
    let mut terms = Vec::new();
    for (k, &v) in c.iter().enumerate().rev() {
        if v == 0 {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => "z".to_string(),
            _ => format!("z^{k}"),
        };
        terms.push(match (v, mono.is_empty()) {
            (_, true) => v.to_string(),
            (1, false) => mono,
            (_, false) => format!("{v}*{mono}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

pub fn format_factorization(f: &FpFactorization) -> String {
    let mut parts = Vec::new();
    if f.c != 1 {
        parts.push(f.c.to_string());
    }
    match f.e0 {
        0 => {}
        1 => parts.push("z".into()),
        e => parts.push(format!("z^{e}")),
    }
    for (g, e) in &f.factors {
        let body = format!("({})", dense(g));
        parts.push(if *e == 1 { body } else { format!("{body}^{e}") });
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" * ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_printing() {
        assert_eq!(dense(&[1, 1, 1]), "z^2+z+1");
        assert_eq!(dense(&[0, 2]), "2*z");
        assert_eq!(dense(&[]), "0");
    }
}
