//! Writing the stages of a universal quantification to a directory.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;

use forall_core::QuantPipelineArtifacts;

use crate::aut::write_aut;

/// Writes every artifact of `arts` as an `.aut` file into `dir` (created if
/// needed), plus `manifest.txt` with one `file<TAB>description` line per
/// file. Returns the manifest text.
pub fn dump_stages(arts: &QuantPipelineArtifacts, dir: &Path) -> io::Result<String> {
    fs::create_dir_all(dir)?;
    let source = &arts.normalized;
    let state = |q: usize| {
        source
            .state_name(q)
            .map_or_else(|| format!("q{q}"), String::from)
    };
    let mut manifest = String::new();
    let mut put = |file: String, what: String, text: String| -> io::Result<()> {
        fs::write(dir.join(&file), text)?;
        writeln!(manifest, "{file}\t{what}").unwrap();
        Ok(())
    };
    let var = &arts.variable;
    put(
        "normalized.aut".into(),
        format!("input after normalization, quantifying {var}"),
        write_aut(source),
    )?;
    put(
        "subset.aut".into(),
        "A': reachable subset states".into(),
        write_aut(&arts.subset.automaton),
    )?;
    put(
        "subset-trimmed.aut".into(),
        "A': trimmed".into(),
        write_aut(&arts.trimmed_subset.automaton),
    )?;
    for (q, a) in arts.cycles.iter().enumerate() {
        put(
            format!("cycle-{q}.aut"),
            format!("A_q for q = {}", state(q)),
            write_aut(a),
        )?;
    }
    for ((q, r), a) in &arts.paths {
        put(
            format!("path-{q}-{r}.aut"),
            format!("A_q,r for q = {}, r = {}", state(*q), state(*r)),
            write_aut(a),
        )?;
    }
    for (q, a) in arts.u_languages.iter().enumerate() {
        put(
            format!("u-{q}.aut"),
            format!("U_q for q = {}", state(q)),
            write_aut(a),
        )?;
    }
    for w in &arts.widgets {
        let members = w.subset.describe(&state);
        put(
            format!("widget-{}.aut", w.state),
            format!("U'_q' for q' = {members}"),
            write_aut(&w.language),
        )?;
    }
    put(
        "assembled.aut".into(),
        "A'' as assembled".into(),
        write_aut(&arts.assembled),
    )?;
    put(
        "result.aut".into(),
        "A'' without ε-transitions, valid encodings only".into(),
        write_aut(&arts.result),
    )?;
    fs::write(dir.join("manifest.txt"), &manifest)?;
    Ok(manifest)
}
