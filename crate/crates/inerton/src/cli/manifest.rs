//! Run manifests: key=value records tying every emitted file to its
//! SHA-256 digest. Identical inputs reproduce identical manifests.

use crate::config::SimulationConfig;
use sha2::{Digest, Sha256};

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// Build the manifest text for one command invocation.
///
/// `outputs` holds (file name, content) pairs; entries are sorted by file
/// name so the manifest is independent of emission order.
pub fn build(command: &str, config: &SimulationConfig, outputs: &[(String, &[u8])]) -> String {
    let mut lines = vec![
        format!("tool_version = {}", env!("CARGO_PKG_VERSION")),
        format!("command = {command}"),
        format!(
            "config_digest = {}",
            sha256_hex(config.to_config_text().as_bytes())
        ),
    ];
    let mut entries: Vec<&(String, &[u8])> = outputs.iter().collect();
    entries.sort_by(|a, b| a.0.cmp(&b.0));
    for (name, content) in entries {
        lines.push(format!("output.{name} = {}", sha256_hex(content)));
    }
    lines.join("\n") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_matches_known_vector() {
        // sha256 of the empty string
        assert_eq!(
            sha256_hex(b""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }

    #[test]
    fn manifest_sorted_and_reproducible() {
        let config = SimulationConfig::unit();
        let outputs = vec![
            ("b.csv".to_string(), b"two".as_slice()),
            ("a.svg".to_string(), b"one".as_slice()),
        ];
        let m1 = build("simulate", &config, &outputs);
        let m2 = build("simulate", &config, &outputs);
        assert_eq!(m1, m2);
        let a = m1.find("output.a.svg").unwrap();
        let b = m1.find("output.b.csv").unwrap();
        assert!(a < b);
    }
}
