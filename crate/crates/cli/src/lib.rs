//! Command-line driver: reads a presentation, runs the nilpotent quotient
//! engine and prints the result as text or as structured JSON.

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use liequot::export::ExportedPresentation;
use liequot::{
    nilpotent_quotient_with, parse_presentation, Definition, Error, Int, LayerStats, Mode, NormalWord, Quotient,
    QuotientOptions,
};

/// Default number of classes computed when no bound is given.
pub const DEFAULT_SAFETY_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Stdin,
    Path(PathBuf),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub input: Input,
    pub class_bound: Option<usize>,
    pub mode: Mode,
    pub format: Format,
    pub stats: bool,
    /// Class limit applied when `class_bound` is absent; `None` lifts it.
    pub safety_cap: Option<usize>,
}

impl RunConfig {
    pub fn new(input: Input) -> Self {
        RunConfig {
            input,
            class_bound: None,
            mode: Mode::Plain,
            format: Format::Text,
            stats: false,
            safety_cap: Some(DEFAULT_SAFETY_CAP),
        }
    }
}

pub mod exit {
    pub const OK: i32 = 0;
    pub const INPUT: i32 = 1;
    pub const MODE: i32 = 2;
    pub const INTERNAL: i32 = 3;
}

/// Runs one computation, writing the result to `out` and diagnostics to
/// `err`. Returns the process exit code.
pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let text = match read_input(&config.input) {
        Ok(text) => text,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read input: {e}");
            return exit::INPUT;
        }
    };
    run_text(&text, config, out, err)
}

/// Like [`run`], with the presentation given as text.
pub fn run_text(text: &str, config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let fp = match parse_presentation(text) {
        Ok(fp) => fp,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit::INPUT;
        }
    };
    let class_bound = match (config.class_bound, config.safety_cap) {
        (Some(c), _) => Some(c),
        (None, Some(cap)) => {
            let _ = writeln!(
                err,
                "warning: no class bound given; stopping at class {cap} unless the series stabilizes earlier"
            );
            Some(cap)
        }
        (None, None) => {
            let _ = writeln!(err, "warning: running without a class bound; this may not terminate");
            None
        }
    };
    let options = QuotientOptions { class_bound, mode: config.mode };
    let stats = config.stats;
    let result = nilpotent_quotient_with(&fp, &options, |layer| {
        if stats {
            let _ = writeln!(err, "{}", format_layer(layer));
        }
    });
    let quotient = match result {
        Ok(q) => q,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return match e {
                Error::Parse(_) | Error::Invalid(_) | Error::MissingImage(_) | Error::GeneratorOutOfRange { .. } => {
                    exit::INPUT
                }
                Error::NonHomogeneous(_) | Error::NotCanonical => exit::MODE,
                Error::Internal(_) => exit::INTERNAL,
            };
        }
    };
    if config.class_bound.is_none() && !quotient.stabilized {
        let _ = writeln!(err, "warning: stopped at the safety cap; the series has not stabilized");
    }
    if stats {
        let total: f64 = quotient.layers.iter().map(|l| l.elapsed.as_secs_f64() * 1e3).sum();
        let _ = writeln!(
            err,
            "total: class {}, {} generators, torsion rank {}, {total:.3} ms",
            quotient.class(),
            quotient.presentation.num_generators(),
            quotient.presentation.torsion_rank()
        );
    }
    let rendered = format_presentation(&quotient, config.format);
    if out.write_all(rendered.as_bytes()).and_then(|_| out.flush()).is_err() {
        return exit::INPUT;
    }
    exit::OK
}

fn read_input(input: &Input) -> io::Result<String> {
    match input {
        Input::Stdin => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
        Input::Path(p) => std::fs::read_to_string(p),
    }
}

/// One progress line for `--stats`.
pub fn format_layer(l: &LayerStats) -> String {
    let mut s = format!(
        "class {}: {} generators ({} torsion), {} pending, {} relations, {:.3} ms",
        l.class,
        l.generators,
        l.torsion,
        l.pending,
        l.relations,
        l.elapsed.as_secs_f64() * 1e3
    );
    if let Some(m) = &l.max_transformer_entry {
        let _ = write!(s, ", max transformer entry {m}");
    }
    s
}

pub fn format_presentation(q: &Quotient, format: Format) -> String {
    match format {
        Format::Text => format_text(q),
        Format::Structured => {
            let mut s = serde_json::to_string_pretty(&ExportedPresentation::from_quotient(q))
                .expect("exported presentations serialize");
            s.push('\n');
            s
        }
    }
}

fn word(w: &NormalWord) -> String {
    w.display().to_string()
}

fn format_text(q: &Quotient) -> String {
    let p = &q.presentation;
    let names = p.source_generators();
    let mut s = String::new();
    let _ = writeln!(s, "# {}", q.input.to_string().replace('\n', "\n# "));
    let _ = writeln!(
        s,
        "# mode {}, class {}, {} generators, torsion rank {}{}",
        p.mode(),
        p.class(),
        p.num_generators(),
        p.torsion_rank(),
        if q.stabilized { ", stabilized" } else { "" }
    );

    let _ = writeln!(s, "\nEpimorphism:");
    for (name, image) in names.iter().zip(p.epimorphism()) {
        let _ = writeln!(s, "  {name} -> {}", word(image));
    }

    let _ = writeln!(s, "\nDefinitions:");
    for k in 0..p.num_generators() {
        let rhs = match p.definition(k) {
            Definition::Image(src) => names[*src].clone(),
            Definition::Bracket { left, right } => format!("[a{}, a{}]", left + 1, right + 1),
            Definition::BracketCombination(terms) => {
                combination(terms.iter().map(|(c, l, r)| (c, format!("[a{}, a{}]", l + 1, r + 1))))
            }
            Definition::ImageCombination(terms) => combination(terms.iter().map(|(c, src)| (c, names[*src].clone()))),
        };
        let _ = writeln!(s, "  a{} := {rhs}", k + 1);
    }

    let _ = writeln!(s, "\nTorsion relations:");
    for i in (0..p.num_generators()).filter(|&i| p.is_torsion(i)) {
        let _ = writeln!(s, "  {}*a{} = {}", p.coefficient(i), i + 1, word(p.power(i)));
    }

    let _ = writeln!(s, "\nProducts:");
    for j in 0..p.num_generators() {
        for i in 0..j {
            let w = p.product(j, i);
            if !w.is_zero() {
                let _ = writeln!(s, "  [a{}, a{}] = {}", j + 1, i + 1, word(w));
            }
        }
    }

    let _ = writeln!(s, "\nLower central factors:");
    for (c, f) in q.lcs_structure().iter().enumerate() {
        let _ = writeln!(s, "  L^{}/L^{} ≅ {f}", c + 1, c + 2);
    }
    s
}

fn combination<'a>(terms: impl Iterator<Item = (&'a Int, String)>) -> String {
    let mut s = String::new();
    for (k, (c, item)) in terms.enumerate() {
        let negative = *c < Int::from(0);
        let magnitude = if negative { -c } else { c.clone() };
        match (k, negative) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        if magnitude != Int::from(1) {
            let _ = write!(s, "{magnitude}*");
        }
        s.push_str(&item);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}
