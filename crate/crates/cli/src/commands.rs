use std::fmt::Write as _;

use cwx_core::linalg::SearchBudget;
use cwx_core::{
    betti, cheeger_check, check_orientability, expansion, laplacian, smallest_nontrivial_eigenvalue,
    spectrum, sweep, BoundVerdict, CWComplex, Cochain, Direction, Error, Field, LaplacianKind, NonOrientableWitness,
    Orientability, Variant,
};

use crate::render::{
    bits, cell_names, dense_text, floats, join, ratio, ratio_short, short, sig12, small_enough, yes_no, Machine,
};
use crate::{exit_code, Command, FieldArg, Format, KindArg, Outcome, Source, VariantArg};

type Rendered = Result<String, Error>;

pub(crate) fn dispatch(command: Command) -> Outcome {
    let (source, format) = match &command {
        Command::Info { source, out }
        | Command::Validate { source, out }
        | Command::Betti { source, out, .. }
        | Command::Spectrum { source, out, .. }
        | Command::Expansion { source, out, .. }
        | Command::Sweep { source, out, .. }
        | Command::Cheeger { source, out, .. }
        | Command::Orient { source, out } => (source.clone(), out.format),
    };
    let complex = match Source::load(&source) {
        Ok(c) => c,
        Err(outcome) => return outcome,
    };
    let machine = format == Format::Machine;
    let report = complex.validate();
    if let Command::Validate { .. } = command {
        let out = validate(&complex, machine);
        return Outcome { code: if report.ok() { 0 } else { 3 }, stdout: out, stderr: String::new() };
    }
    if !report.ok() {
        return Outcome { code: 3, stdout: String::new(), stderr: format!("error: invalid complex: {report}\n") };
    }
    let rendered = match command {
        Command::Info { .. } => Ok(info(&complex, machine)),
        Command::Validate { .. } => unreachable!("handled above"),
        Command::Betti { dim, field, reduced, .. } => betti_cmd(&complex, dim, field, reduced, machine),
        Command::Spectrum { dim, kind, reduced, tol, .. } => spectrum_cmd(&complex, dim, kind, reduced, tol, machine),
        Command::Expansion { dim, variant, reduced, budget, .. } => {
            expansion_cmd(&complex, dim, variant, reduced, search_budget(budget), machine)
        }
        Command::Sweep { values, tol, .. } => sweep_cmd(&complex, values.as_deref(), tol, machine),
        Command::Cheeger { reduced, budget, .. } => cheeger_cmd(&complex, reduced, search_budget(budget), machine),
        Command::Orient { .. } => orient_cmd(&complex, machine),
    };
    match rendered {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(e) => Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn search_budget(log2: Option<u32>) -> SearchBudget {
    log2.map_or_else(SearchBudget::default, SearchBudget::uniform)
}

fn top_dim(c: &CWComplex, dim: Option<usize>) -> usize {
    dim.unwrap_or(c.dim())
}

fn validate(c: &CWComplex, machine: bool) -> String {
    let report = c.validate();
    if machine {
        let mut m = Machine::default();
        m.kv("ok", report.ok());
        for v in &report.violations {
            m.kv("violation", v);
        }
        m.finish()
    } else if report.ok() {
        "ok\n".to_string()
    } else {
        let mut s = format!("invalid: {} violation(s)\n", report.violations.len());
        for v in &report.violations {
            writeln!(s, "  {v}").unwrap();
        }
        s
    }
}

fn info(c: &CWComplex, machine: bool) -> String {
    let d = c.dim();
    let euler: i64 = c.cell_counts().iter().enumerate().map(|(n, &k)| if n % 2 == 0 { k as i64 } else { -(k as i64) }).sum();
    let boundary = if d >= 1 { c.boundary_set().unwrap_or_default() } else { Vec::new() };
    if machine {
        let mut m = Machine::default();
        m.kv("dim", d)
            .kv("cells", join(c.cell_counts()))
            .kv("regular_asserted", c.regular_asserted())
            .kv("incidence_pm1", c.incidence_is_pm1())
            .kv("euler_characteristic", euler);
        for n in 0..d {
            m.kv(&format!("degrees_{n}"), join(c.degrees(n)));
        }
        if d >= 1 {
            m.kv("boundary_cells", join(&boundary))
                .kv("max_ridge_degree", c.max_ridge_degree().unwrap())
                .kv("m", c.max_top_boundary_size().unwrap());
        }
        for n in 1..=d {
            let inc = c.incidence(n).unwrap();
            m.kv(&format!("I_{n}_shape"), format!("{} {}", inc.rows(), inc.cols()));
            for (r, row) in inc.to_dense().iter().enumerate() {
                m.kv(&format!("I_{n}[{r}]"), join(row));
            }
        }
        return m.finish();
    }
    let mut s = String::new();
    writeln!(s, "dimension {d}").unwrap();
    let counts: Vec<String> = c.cell_counts().iter().enumerate().map(|(n, k)| format!("c_{n} = {k}")).collect();
    writeln!(s, "cells: {}", counts.join(", ")).unwrap();
    writeln!(s, "regular asserted: {}", yes_no(c.regular_asserted())).unwrap();
    writeln!(s, "incidence in {{-1,0,1}}: {}", yes_no(c.incidence_is_pm1())).unwrap();
    writeln!(s, "euler characteristic: {euler}").unwrap();
    if d >= 1 {
        writeln!(s, "boundary (d-1)-cells: {} [{}]", boundary.len(), cell_names(c, d - 1, &boundary)).unwrap();
        writeln!(s, "max (d-1)-cell degree: {}", c.max_ridge_degree().unwrap()).unwrap();
        writeln!(s, "m = {}", c.max_top_boundary_size().unwrap()).unwrap();
    }
    for n in 1..=d {
        let inc = c.incidence(n).unwrap();
        if small_enough(inc) {
            writeln!(s, "I_{n} ({} x {}):", inc.rows(), inc.cols()).unwrap();
            s.push_str(&dense_text(&inc.to_dense(), "  "));
        } else {
            writeln!(s, "I_{n} ({} x {}, {} nonzeros; use --format machine)", inc.rows(), inc.cols(), inc.nnz()).unwrap();
        }
    }
    s
}

fn field_of(f: FieldArg) -> Field {
    match f {
        FieldArg::F2 => Field::F2,
        FieldArg::Q => Field::Q,
    }
}

fn betti_cmd(c: &CWComplex, dim: Option<usize>, field: FieldArg, reduced: bool, machine: bool) -> Rendered {
    let field = field_of(field);
    let dims: Vec<usize> = match dim {
        Some(n) => vec![n],
        None => (0..=c.dim()).collect(),
    };
    let values = dims.iter().map(|&n| betti(c, n, field, reduced).map(|b| (n, b))).collect::<Result<Vec<_>, _>>()?;
    if machine {
        let mut m = Machine::default();
        m.kv("field", field.to_string().to_lowercase()).kv("reduced", reduced);
        for (n, b) in values {
            m.kv(&format!("b_{n}"), b);
        }
        return Ok(m.finish());
    }
    let mut s = String::new();
    let tilde = if reduced { "~" } else { "" };
    for (n, b) in values {
        writeln!(s, "{tilde}b_{n}({field}) = {b}").unwrap();
    }
    Ok(s)
}

fn rounded_rows(a: &cwx_core::linalg::DenseMatrix) -> Vec<Vec<i64>> {
    (0..a.rows()).map(|r| a.row(r).iter().map(|x| x.round() as i64).collect()).collect()
}

fn spectrum_cmd(c: &CWComplex, dim: Option<usize>, kind: KindArg, reduced: bool, tol: f64, machine: bool) -> Rendered {
    let n = top_dim(c, dim);
    let (lkind, direction) = match kind {
        KindArg::Upper => (LaplacianKind::Upper, Some(Direction::Upper)),
        KindArg::Lower => (LaplacianKind::Lower, Some(Direction::Lower)),
        KindArg::Full => (LaplacianKind::Full, None),
    };
    let lap = laplacian(c, n, lkind, reduced)?;
    let eig = spectrum(c, n, lkind, reduced, tol)?;
    let restricted = direction.map(|dir| smallest_nontrivial_eigenvalue(c, n, dir, reduced, tol)).transpose()?;
    let threshold = cwx_core::linalg::zero_threshold(&lap);
    let rows = rounded_rows(&lap);
    if machine {
        let mut m = Machine::default();
        m.kv("n", n).kv("kind", lkind).kv("reduced", reduced).kv("size", lap.rows());
        for (r, row) in rows.iter().enumerate() {
            m.kv(&format!("laplacian[{r}]"), join(row));
        }
        m.kv("eigenvalues", floats(&eig.values)).kv("zero_threshold", format!("{threshold:.6e}"));
        m.kv("kernel_dim", eig.values.iter().filter(|&&x| x < threshold).count());
        if let Some(r) = &restricted {
            m.kv("trivial_dim", r.trivial_dim)
                .kv("restricted_eigenvalues", floats(&r.restricted_spectrum))
                .kv("lambda", sig12(r.lambda))
                .kv("lambda_is_zero", r.is_zero())
                .kv("eigenvector", floats(r.vector()));
        }
        return Ok(m.finish());
    }
    let mut s = String::new();
    writeln!(s, "{lkind} Laplacian on {n}-cochains ({} x {})", lap.rows(), lap.cols()).unwrap();
    if lap.rows() <= crate::render::TEXT_MATRIX_LIMIT {
        s.push_str(&dense_text(&rows, "  "));
    }
    writeln!(s, "eigenvalues: {}", join(eig.values.iter().map(|&x| short(x)))).unwrap();
    writeln!(s, "zero threshold: {threshold:.3e}").unwrap();
    if let Some(r) = &restricted {
        let name = if r.direction == Direction::Lower { format!("lambda_{n}") } else { format!("lambda^{n}") };
        writeln!(s, "trivial subspace dimension: {}", r.trivial_dim).unwrap();
        writeln!(s, "{name} = {}{}", short(r.lambda), if r.is_zero() { " (zero)" } else { "" }).unwrap();
        writeln!(s, "eigenvector: {}", join(r.vector().iter().map(|&x| short(x)))).unwrap();
    }
    Ok(s)
}

fn expansion_cmd(
    c: &CWComplex,
    dim: Option<usize>,
    variant: VariantArg,
    reduced: bool,
    budget: SearchBudget,
    machine: bool,
) -> Rendered {
    let n = top_dim(c, dim);
    let variant = match variant {
        VariantArg::Boundary => Variant::Boundary,
        VariantArg::Coboundary => Variant::Coboundary,
    };
    let cert = expansion(c, n, variant, reduced, budget)?;
    let witness = cert.witness_vector();
    let target = match variant {
        Variant::Boundary => n.checked_sub(1),
        Variant::Coboundary => Some(n + 1),
    };
    if machine {
        let mut m = Machine::default();
        m.kv("n", n)
            .kv("variant", variant)
            .kv("reduced", reduced)
            .kv("h", format!("{}/{}", cert.numerator, cert.denominator))
            .kv("h_reduced", ratio(cert.h))
            .kv("numerator", cert.numerator)
            .kv("denominator", cert.denominator)
            .kv("witness", bits(witness))
            .kv("witness_support", join(witness.support()))
            .kv("image_support", join(&cert.image_support));
        return Ok(m.finish());
    }
    let symbol = if variant == Variant::Boundary { format!("h_{n}") } else { format!("h^{n}") };
    let mut s = String::new();
    writeln!(s, "{variant} expansion {symbol} = {} (= {}/{})", ratio_short(cert.h), cert.numerator, cert.denominator).unwrap();
    writeln!(s, "witness ({} cells): {}", witness.weight(), cell_names(c, n, &witness.support())).unwrap();
    let image = match target {
        Some(t) if t <= c.dim() => cell_names(c, t, &cert.image_support),
        _ => join(&cert.image_support),
    };
    let op = if variant == Variant::Boundary { "boundary" } else { "coboundary" };
    writeln!(s, "{op} of witness ({} cells): {image}", cert.image_support.len()).unwrap();
    Ok(s)
}

fn parse_values(text: &str) -> Result<Vec<f64>, Error> {
    text.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| Error::Argument(format!("invalid cochain value '{}'", t.trim()))))
        .collect()
}

fn sweep_cmd(c: &CWComplex, values: Option<&str>, tol: f64, machine: bool) -> Rendered {
    let d = c.dim();
    let f = match values {
        Some(text) => Cochain::real(d, parse_values(text)?),
        None => smallest_nontrivial_eigenvalue(c, d, Direction::Lower, false, tol)?.eigenvector,
    };
    let prof = sweep(c, &f)?;
    let aug = &prof.augmented.augmented;
    let witness = prof.witness.as_f2().expect("F2 witness");
    if machine {
        let mut m = Machine::default();
        m.kv("d", d)
            .kv("real_count", prof.real_count())
            .kv("virtual_count", prof.virtual_count)
            .kv("order", join(&prof.order))
            .kv("cuts", join(&prof.cuts))
            .kv("all_cuts", join(&prof.all_cuts))
            .kv("sigma", join(&prof.sigma))
            .kv("H", ratio(prof.h))
            .kv("H_numerator", prof.h_numerator)
            .kv("H_denominator", prof.h_denominator)
            .kv("argmin", prof.argmin)
            .kv("witness", bits(witness))
            .kv("m", prof.m);
        return Ok(m.finish());
    }
    let mut s = String::new();
    writeln!(s, "sweep over {} real and {} virtual {d}-cells", prof.real_count(), prof.virtual_count).unwrap();
    writeln!(s, "order: {}", cell_names(aug, d, &prof.order)).unwrap();
    writeln!(s, "|C_i| for i = 0..{}: {}", prof.real_count() - 1, join(&prof.cuts)).unwrap();
    writeln!(
        s,
        "H[f] = {} (= {}/{}) at i* = {}",
        ratio_short(prof.h),
        prof.h_numerator,
        prof.h_denominator,
        prof.argmin
    )
    .unwrap();
    writeln!(s, "witness: {}", cell_names(c, d, &witness.support())).unwrap();
    writeln!(s, "m = {}", prof.m).unwrap();
    Ok(s)
}

fn verdict_text(v: &BoundVerdict) -> String {
    let holds = if v.holds { "HOLDS" } else { "FAILS" };
    match v.failed_hypothesis {
        None => format!("{holds} (slack {})", short(v.slack)),
        Some(h) => format!("NOT APPLICABLE ({h} fails); numerically {holds} (slack {})", short(v.slack)),
    }
}

fn verdict_machine(m: &mut Machine, prefix: &str, v: &BoundVerdict) {
    m.kv(&format!("{prefix}_applicable"), v.applicable())
        .kv(&format!("{prefix}_failed_hypothesis"), v.failed_hypothesis.unwrap_or("none").replace(' ', "_"))
        .kv(&format!("{prefix}_holds"), v.holds)
        .kv(&format!("{prefix}_slack"), sig12(v.slack));
}

fn cheeger_cmd(c: &CWComplex, reduced: bool, budget: SearchBudget, machine: bool) -> Rendered {
    let r = cheeger_check(c, reduced, budget)?;
    let d = r.d;
    let witness = r.h.witness_vector();
    let orientable = match r.orientable {
        Some(b) => b.to_string(),
        None => "undecided".to_string(),
    };
    if machine {
        let mut m = Machine::default();
        m.kv("d", d)
            .kv("regular_asserted", r.regular_asserted)
            .kv("incidence_pm1", r.incidence_pm1)
            .kv("orientable", &orientable)
            .kv("max_ridge_degree", r.max_ridge_degree)
            .kv("lambda_d", sig12(r.lambda_d()))
            .kv("lambda_zero_threshold", format!("{:.6e}", r.lambda.zero_threshold))
            .kv("h_d", ratio(r.h.h))
            .kv("h_numerator", r.h.numerator)
            .kv("h_denominator", r.h.denominator)
            .kv("h_witness", bits(witness))
            .kv("m", r.m)
            .kv("upper_value", sig12(r.upper_value()));
        verdict_machine(&mut m, "lower", &r.lower);
        verdict_machine(&mut m, "upper", &r.upper);
        return Ok(m.finish());
    }
    let mut s = String::new();
    writeln!(s, "Cheeger-type bounds in top dimension d = {d}").unwrap();
    writeln!(s, "hypotheses:").unwrap();
    writeln!(s, "  regular asserted          {}", yes_no(r.regular_asserted)).unwrap();
    writeln!(s, "  incidence in {{-1,0,1}}     {}", yes_no(r.incidence_pm1)).unwrap();
    let orient_text = r.orientable.map_or("undecided", yes_no);
    writeln!(s, "  orientable                {orient_text}").unwrap();
    writeln!(s, "  (d-1)-cell degrees <= 2   {} (max {})", yes_no(r.max_ridge_degree <= 2), r.max_ridge_degree).unwrap();
    writeln!(s, "lambda_d = {}", short(r.lambda_d())).unwrap();
    writeln!(s, "h_d = {} (= {}/{})", ratio_short(r.h.h), r.h.numerator, r.h.denominator).unwrap();
    writeln!(s, "  witness: {}", cell_names(c, d, &witness.support())).unwrap();
    writeln!(s, "m = {}", r.m).unwrap();
    writeln!(s, "lower bound  lambda_d <= h_d: {}", verdict_text(&r.lower)).unwrap();
    writeln!(s, "upper bound  h_d <= sqrt(2 m lambda_d) = {}: {}", short(r.upper_value()), verdict_text(&r.upper)).unwrap();
    Ok(s)
}

fn orient_cmd(c: &CWComplex, machine: bool) -> Rendered {
    let d = c.dim();
    let o = check_orientability(c)?;
    let mut m = Machine::default();
    let mut s = String::new();
    match &o {
        Orientability::Orientable(signs) => {
            m.kv("orientable", true).kv("signs", join(signs.signs()));
            writeln!(s, "orientable").unwrap();
            let flipped: Vec<usize> = signs.signs().iter().enumerate().filter(|(_, &x)| x < 0).map(|(i, _)| i).collect();
            writeln!(s, "flip {} of {} {d}-cells: {}", flipped.len(), signs.len(), cell_names(c, d, &flipped)).unwrap();
        }
        Orientability::NonOrientable(NonOrientableWitness::Branching { ridge, cofaces }) => {
            m.kv("orientable", false).kv("witness", "branching").kv("ridge", ridge).kv("cofaces", join(cofaces));
            writeln!(s, "not orientable").unwrap();
            writeln!(
                s,
                "{} has {} cofaces: {}",
                c.cell_name(d - 1, *ridge),
                cofaces.len(),
                cell_names(c, d, cofaces)
            )
            .unwrap();
        }
        Orientability::NonOrientable(NonOrientableWitness::OddCycle { cells, ridges }) => {
            m.kv("orientable", false).kv("witness", "odd_cycle").kv("cells", join(cells)).kv("ridges", join(ridges));
            writeln!(s, "not orientable").unwrap();
            writeln!(s, "inconsistent cycle of {} {d}-cells: {}", cells.len(), cell_names(c, d, cells)).unwrap();
            writeln!(s, "through ridges: {}", cell_names(c, d - 1, ridges)).unwrap();
        }
    }
    Ok(if machine { m.finish() } else { s })
}
