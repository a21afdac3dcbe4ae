//! Regenerates the committed corpus manifests under `corpora/`.
//!
//! Usage: `gen_corpora <output-dir>`. Writes one manifest per structure
//! class, enumerated up to that class's supported cap. Output is
//! deterministic, so re-running produces byte-identical files.

use std::path::PathBuf;

use lq_core::enumerate::{corpus, StructureClass};
use lq_core::io::{format_manifest, write_string};

fn main() {
    let dir: PathBuf = std::env::args()
        .nth(1)
        .expect("usage: gen_corpora <output-dir>")
        .into();
    std::fs::create_dir_all(&dir).expect("create output dir");
    let classes = [
        StructureClass::LeftQuasigroup,
        StructureClass::Idempotent,
        StructureClass::Latin,
        StructureClass::Rack,
        StructureClass::Quandle,
        StructureClass::InvolutoryQuandle,
    ];
    for class in classes {
        let cap = class.cap();
        let start = std::time::Instant::now();
        let manifest = corpus(cap, class).expect("enumeration within cap");
        let total: usize = manifest.entries.iter().map(|e| e.count).sum();
        let path = dir.join(format!("{}-{}.json", class.name(), cap));
        write_string(&path, &format_manifest(&manifest)).expect("write manifest");
        eprintln!(
            "{}: {} classes through order {} in {:.1?} -> {}",
            class.name(),
            total,
            cap,
            start.elapsed(),
            path.display()
        );
    }
}
