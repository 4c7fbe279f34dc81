use serde::{Deserialize, Serialize};
use shapenorm::Point64;

/// Flat result of one computation. Absent fields are omitted from the
/// structured output. Angles are radians unless `angle_unit` says `deg`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportRecord {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form_kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normal_point: Option<[f64; 2]>,
    /// `[A, B, C]` of the normal circle triangle.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub circle_vertices: Option<[[f64; 2]; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quad_c: Option<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quad_d: Option<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbit_types: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub in_domain: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub angle_class: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side_class: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub angles: Option<[f64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub angle_unit: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side_ratios: Option<[f64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub similar: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub key_a: Option<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub key_b: Option<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub files: Option<Vec<String>>,
}

pub fn pair(p: Point64) -> [f64; 2] {
    [p.x, p.y]
}

impl ReportRecord {
    pub fn new(command: &str) -> Self {
        ReportRecord {
            command: command.to_string(),
            ..Default::default()
        }
    }

    fn numbers(&self) -> Vec<f64> {
        let mut out = Vec::new();
        out.extend(self.normal_point.iter().flatten());
        out.extend(self.circle_vertices.iter().flatten().flatten());
        out.extend(self.quad_c.iter().flatten());
        out.extend(self.quad_d.iter().flatten());
        out.extend(self.angles.iter().flatten());
        out.extend(self.side_ratios.iter().flatten());
        out.extend(self.key_a.iter().flatten().flatten());
        out.extend(self.key_b.iter().flatten().flatten());
        out
    }

    pub fn is_finite(&self) -> bool {
        self.numbers().iter().all(|x| x.is_finite())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record fields are always serializable")
    }

    pub fn from_json(line: &str) -> serde_json::Result<Self> {
        serde_json::from_str(line)
    }

    /// `name: value` lines in field order.
    pub fn to_text(&self) -> String {
        fn nums(v: &[f64]) -> String {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        }
        fn points(v: &[[f64; 2]]) -> String {
            v.iter().map(|p| nums(p)).collect::<Vec<_>>().join(", ")
        }
        let mut lines = vec![format!("command: {}", self.command)];
        let mut push = |name: &str, value: Option<String>| {
            if let Some(v) = value {
                lines.push(format!("{name}: {v}"));
            }
        };
        push("input", self.input.clone());
        push("form_kind", self.form_kind.clone());
        push("normal_point", self.normal_point.map(|p| nums(&p)));
        push("circle_vertices", self.circle_vertices.map(|v| points(&v)));
        push("quad_c", self.quad_c.map(|p| nums(&p)));
        push("quad_d", self.quad_d.map(|p| nums(&p)));
        push("orbit_types", self.orbit_types.map(|n| n.to_string()));
        push("in_domain", self.in_domain.map(|b| b.to_string()));
        push("angle_class", self.angle_class.clone());
        push("side_class", self.side_class.clone());
        push("angles", self.angles.map(|a| nums(&a)));
        push("angle_unit", self.angle_unit.clone());
        push("side_ratios", self.side_ratios.map(|a| nums(&a)));
        push("similar", self.similar.map(|b| b.to_string()));
        push("key_a", self.key_a.as_deref().map(points));
        push("key_b", self.key_b.as_deref().map(points));
        push("files", self.files.as_ref().map(|f| f.join(", ")));
        let mut out = lines.join("\n");
        out.push('\n');
        out
    }
}
