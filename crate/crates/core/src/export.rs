//! Serializable form of a computed presentation.
//!
//! Generator indices are 1-based (matching the `a1, a2, ...` names) and all
//! integers are decimal strings so that arbitrarily large values survive any
//! JSON reader.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::engine::{check_consistency, lcs_structure, Quotient};
use crate::error::{Error, Result};
use crate::int::Int;
use crate::intmat::LcsFactor;
use crate::presentation::{Definition, Mode, NilpotentPresentation};
use crate::word::NormalWord;

pub const FORMAT: &str = "liequot-presentation/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportedTerm {
    pub generator: usize,
    pub coefficient: String,
}

pub type ExportedWord = Vec<ExportedTerm>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExportedDefinition {
    Image { source: usize },
    Bracket { left: usize, right: usize },
    BracketCombination { terms: Vec<ExportedBracketTerm> },
    ImageCombination { terms: Vec<ExportedImageTerm> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportedBracketTerm {
    pub coefficient: String,
    pub left: usize,
    pub right: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportedImageTerm {
    pub coefficient: String,
    pub source: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportedGenerator {
    pub weight: usize,
    /// Torsion coefficient, absent for free generators.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torsion: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub power: ExportedWord,
    pub definition: ExportedDefinition,
}

/// A nonzero product `[a_left, a_right] = word` with `left > right`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportedProduct {
    pub left: usize,
    pub right: usize,
    pub word: ExportedWord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportedFactor {
    pub torsion: Vec<String>,
    pub free_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportedPresentation {
    pub format: String,
    pub mode: Mode,
    pub source_generators: Vec<String>,
    #[serde(default)]
    pub relators: Vec<String>,
    pub class: usize,
    #[serde(default)]
    pub stabilized: bool,
    pub dimensions: Vec<usize>,
    pub generators: Vec<ExportedGenerator>,
    pub products: Vec<ExportedProduct>,
    /// Image of each source generator.
    pub epimorphism: Vec<ExportedWord>,
    /// Lower central factors `L^c / L^{c+1}`, one per class.
    pub lcs: Vec<ExportedFactor>,
}

fn export_word(w: &NormalWord) -> ExportedWord {
    w.terms().iter().map(|(k, c)| ExportedTerm { generator: k + 1, coefficient: c.to_string() }).collect()
}

fn export_factor(f: &LcsFactor) -> ExportedFactor {
    ExportedFactor { torsion: f.torsion.iter().map(ToString::to_string).collect(), free_rank: f.free_rank }
}

impl ExportedPresentation {
    pub fn from_presentation(p: &NilpotentPresentation) -> Self {
        let n = p.num_generators();
        let generators = (0..n)
            .map(|i| ExportedGenerator {
                weight: p.weights[i],
                torsion: p.is_torsion(i).then(|| p.coefficients[i].to_string()),
                power: export_word(&p.powers[i]),
                definition: match &p.definitions[i] {
                    Definition::Image(s) => ExportedDefinition::Image { source: s + 1 },
                    Definition::Bracket { left, right } => {
                        ExportedDefinition::Bracket { left: left + 1, right: right + 1 }
                    }
                    Definition::BracketCombination(t) => ExportedDefinition::BracketCombination {
                        terms: t
                            .iter()
                            .map(|(c, l, r)| ExportedBracketTerm {
                                coefficient: c.to_string(),
                                left: l + 1,
                                right: r + 1,
                            })
                            .collect(),
                    },
                    Definition::ImageCombination(t) => ExportedDefinition::ImageCombination {
                        terms: t
                            .iter()
                            .map(|(c, s)| ExportedImageTerm { coefficient: c.to_string(), source: s + 1 })
                            .collect(),
                    },
                },
            })
            .collect();
        let mut products = Vec::new();
        for j in 0..n {
            for i in 0..j {
                let w = &p.products[j][i];
                if !w.is_zero() {
                    products.push(ExportedProduct { left: j + 1, right: i + 1, word: export_word(w) });
                }
            }
        }
        ExportedPresentation {
            format: FORMAT.to_string(),
            mode: p.mode(),
            source_generators: p.source.clone(),
            relators: Vec::new(),
            class: p.class(),
            stabilized: false,
            dimensions: p.dimensions(),
            generators,
            products,
            epimorphism: p.epimorphism.iter().map(export_word).collect(),
            lcs: lcs_structure(p).iter().map(export_factor).collect(),
        }
    }

    pub fn from_quotient(q: &Quotient) -> Self {
        let mut e = Self::from_presentation(&q.presentation);
        e.relators = q.input.relators.iter().map(|r| r.display(&q.input.generators).to_string()).collect();
        e.stabilized = q.stabilized;
        e
    }

    /// Rebuilds the presentation, checking its consistency and the recorded
    /// dimensions and lower central factors.
    pub fn to_presentation(&self) -> Result<NilpotentPresentation> {
        if self.format != FORMAT {
            return Err(invalid(format!("unknown format {:?}", self.format)));
        }
        let n = self.generators.len();
        let m = self.source_generators.len();
        let gen_index = |k: usize| -> Result<usize> {
            if (1..=n).contains(&k) {
                Ok(k - 1)
            } else {
                Err(invalid(format!("generator index {k} out of range")))
            }
        };
        let src_index = |s: usize| -> Result<usize> {
            if (1..=m).contains(&s) {
                Ok(s - 1)
            } else {
                Err(invalid(format!("source generator index {s} out of range")))
            }
        };
        let word = |w: &ExportedWord| -> Result<NormalWord> {
            let mut terms = Vec::with_capacity(w.len());
            for t in w {
                terms.push((gen_index(t.generator)?, parse_int(&t.coefficient)?));
            }
            if terms.windows(2).any(|p| p[0].0 >= p[1].0) {
                return Err(invalid("word terms must have increasing generator indices".into()));
            }
            Ok(NormalWord::from_terms(terms))
        };

        let mut p = NilpotentPresentation::empty(self.source_generators.clone(), self.mode);
        for g in &self.generators {
            let definition = match &g.definition {
                ExportedDefinition::Image { source } => Definition::Image(src_index(*source)?),
                ExportedDefinition::Bracket { left, right } => {
                    Definition::Bracket { left: gen_index(*left)?, right: gen_index(*right)? }
                }
                ExportedDefinition::BracketCombination { terms } => Definition::BracketCombination(
                    terms
                        .iter()
                        .map(|t| Ok((parse_int(&t.coefficient)?, gen_index(t.left)?, gen_index(t.right)?)))
                        .collect::<Result<_>>()?,
                ),
                ExportedDefinition::ImageCombination { terms } => Definition::ImageCombination(
                    terms
                        .iter()
                        .map(|t| Ok((parse_int(&t.coefficient)?, src_index(t.source)?)))
                        .collect::<Result<_>>()?,
                ),
            };
            p.push_generator(g.weight, definition);
        }
        for (i, g) in self.generators.iter().enumerate() {
            if let Some(c) = &g.torsion {
                p.coefficients[i] = parse_int(c)?;
            }
            p.powers[i] = word(&g.power)?;
        }
        for prod in &self.products {
            let (j, i) = (gen_index(prod.left)?, gen_index(prod.right)?);
            if j <= i {
                return Err(invalid(format!("product [a{}, a{}] must have left > right", prod.left, prod.right)));
            }
            p.products[j][i] = word(&prod.word)?;
        }
        if self.epimorphism.len() != m {
            return Err(invalid("epimorphism must list one image per source generator".into()));
        }
        p.epimorphism = self.epimorphism.iter().map(word).collect::<Result<_>>()?;

        check_consistency(&p).map_err(Error::Invalid)?;
        if p.class() != self.class || p.dimensions() != self.dimensions {
            return Err(invalid("recorded class or dimensions disagree with the generators".into()));
        }
        let lcs: Vec<ExportedFactor> = lcs_structure(&p).iter().map(export_factor).collect();
        if lcs != self.lcs {
            return Err(invalid("recorded lower central factors disagree with the presentation".into()));
        }
        Ok(p)
    }
}

fn invalid(msg: String) -> Error {
    Error::Invalid(msg)
}

fn parse_int(s: &str) -> Result<Int> {
    Int::from_str(s).map_err(|_| invalid(format!("{s:?} is not an integer")))
}
