//! The analysis request document and its validation.

use serde::{Deserialize, Serialize};
use uniflag_core::{DynkinDiagram, Hypotheses, Hypothesis, Tag};

/// A request as read from JSON. Values are checked by [`AnalysisRequest::resolve`]
/// so that errors can name the offending field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisRequest {
    pub diagram: String,
    pub tag: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cdim: Option<i64>,
    /// Asserted hypotheses; when absent, the standing ones.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hypotheses: Option<Vec<String>>,
}

/// An invalid request, with a pointer to the field at fault.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldError {
    pub field: String,
    pub message: String,
}

impl std::fmt::Display for FieldError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "invalid request at `{}`: {}", self.field, self.message)
    }
}

impl std::error::Error for FieldError {}

fn field_error(field: impl Into<String>, message: impl ToString) -> FieldError {
    FieldError {
        field: field.into(),
        message: message.to_string(),
    }
}

/// A checked request.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub diagram: DynkinDiagram,
    pub tag: Tag,
    pub hypotheses: Hypotheses,
}

impl AnalysisRequest {
    pub fn from_json(text: &str) -> Result<Self, FieldError> {
        serde_json::from_str(text).map_err(|e| field_error("request", e))
    }

    pub fn resolve(&self) -> Result<Resolved, FieldError> {
        let diagram: DynkinDiagram = self
            .diagram
            .parse()
            .map_err(|e| field_error("diagram", e))?;
        let mut entries = Vec::with_capacity(self.tag.len());
        for (i, &v) in self.tag.iter().enumerate() {
            let v = u32::try_from(v).map_err(|_| {
                field_error(
                    format!("tag[{i}]"),
                    format!("{v} is not a nonnegative integer"),
                )
            })?;
            entries.push(v);
        }
        let tag = Tag::new(entries);
        tag.check_rank(&diagram)
            .map_err(|e| field_error("tag", e))?;
        let cdim =
            match self.cdim {
                None => None,
                Some(c) => Some(u32::try_from(c).ok().filter(|&c| c >= 1).ok_or_else(|| {
                    field_error("cdim", format!("{c} is not a positive integer"))
                })?),
            };
        let mut hypotheses = match &self.hypotheses {
            None => Hypotheses::default(),
            Some(names) => {
                let mut flags = Vec::with_capacity(names.len());
                for (i, name) in names.iter().enumerate() {
                    flags.push(
                        name.parse::<Hypothesis>()
                            .map_err(|e| field_error(format!("hypotheses[{i}]"), e))?,
                    );
                }
                Hypotheses::from_flags(flags, None)
            }
        };
        hypotheses.cdim = cdim;
        Ok(Resolved {
            diagram,
            tag,
            hypotheses,
        })
    }

    /// The request with defaults filled in, as echoed in reports.
    pub fn normalized(resolved: &Resolved) -> Self {
        AnalysisRequest {
            diagram: resolved.diagram.to_string(),
            tag: resolved
                .tag
                .entries()
                .iter()
                .map(|&v| i64::from(v))
                .collect(),
            cdim: resolved.hypotheses.cdim.map(i64::from),
            hypotheses: Some(
                Hypothesis::ALL
                    .iter()
                    .filter(|h| resolved.hypotheses.holds(**h))
                    .map(|h| h.name().to_string())
                    .collect(),
            ),
        }
    }
}
