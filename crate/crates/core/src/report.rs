//! Canonical JSON output shared by every report type.

use serde::Serialize;

/// Pretty-printed JSON with object keys sorted.
///
/// Going through [`serde_json::Value`] sorts keys because its map is ordered,
/// so output is byte-identical for equal values.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("report types serialize");
    serde_json::to_string_pretty(&value).expect("value serializes")
}
