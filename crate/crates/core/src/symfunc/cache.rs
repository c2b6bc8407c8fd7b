//! Persistent store for modified Macdonald polynomials.
//!
//! The directory is taken from `DELTASQ_CACHE_DIR`, falling back to
//! `$XDG_CACHE_HOME/deltasq` and then `$HOME/.cache/deltasq`. Each partition
//! gets one text file; a version header lets format changes invalidate old
//! entries. Writes go through a temporary file and a rename, so concurrent
//! writers of the same (deterministic) entry are harmless.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::sync::RwLock;

use crate::partition::Partition;
use crate::qt::QTPoly;

pub const ENV_VAR: &str = "DELTASQ_CACHE_DIR";
const HEADER: &str = "deltasq macdonald cache v1";

enum Setting {
    Default,
    Disabled,
    Dir(PathBuf),
}

static SETTING: RwLock<Setting> = RwLock::new(Setting::Default);

/// Turns the disk cache off for the rest of the process.
pub fn disable() {
    *SETTING.write().expect("poisoned") = Setting::Disabled;
}

/// Uses `dir` instead of the default location.
pub fn set_dir(dir: PathBuf) {
    *SETTING.write().expect("poisoned") = Setting::Dir(dir);
}

/// The active cache directory, if any.
pub fn dir() -> Option<PathBuf> {
    match &*SETTING.read().expect("poisoned") {
        Setting::Disabled => None,
        Setting::Dir(d) => Some(d.clone()),
        Setting::Default => default_dir(),
    }
}

fn default_dir() -> Option<PathBuf> {
    let env = |k: &str| std::env::var_os(k).filter(|v| !v.is_empty()).map(PathBuf::from);
    env(ENV_VAR)
        .or_else(|| env("XDG_CACHE_HOME").map(|d| d.join("deltasq")))
        .or_else(|| env("HOME").map(|d| d.join(".cache").join("deltasq")))
}

fn file_name(mu: &Partition) -> String {
    let parts: Vec<String> = mu.parts().iter().map(|p| p.to_string()).collect();
    format!("H_{}.txt", parts.join("_"))
}

pub(crate) fn render(mu: &Partition, terms: &[(Partition, QTPoly)]) -> String {
    let mut s = format!("{HEADER}\npartition {mu}\nbasis monomial\n");
    for (p, c) in terms {
        s.push_str(&format!("{p} {c}\n"));
    }
    s
}

pub(crate) fn parse(mu: &Partition, text: &str) -> Option<Vec<(Partition, QTPoly)>> {
    let mut lines = text.lines();
    if lines.next()? != HEADER || lines.next()? != format!("partition {mu}") {
        return None;
    }
    if lines.next()? != "basis monomial" {
        return None;
    }
    lines
        .map(|l| {
            let (p, c) = l.split_once(' ')?;
            Some((p.parse().ok()?, c.parse().ok()?))
        })
        .collect()
}

pub(crate) fn load(mu: &Partition) -> Option<Vec<(Partition, QTPoly)>> {
    let path = dir()?.join(file_name(mu));
    parse(mu, &fs::read_to_string(path).ok()?)
}

/// Best effort: an unwritable cache only costs recomputation.
pub(crate) fn store(mu: &Partition, terms: &[(Partition, QTPoly)]) {
    let Some(dir) = dir() else { return };
    if fs::create_dir_all(&dir).is_err() {
        return;
    }
    let target = dir.join(file_name(mu));
    let tmp = dir.join(format!(
        ".{}.{}.{:?}",
        file_name(mu),
        std::process::id(),
        std::thread::current().id()
    ));
    let ok = fs::File::create(&tmp)
        .and_then(|mut f| f.write_all(render(mu, terms).as_bytes()))
        .is_ok();
    if !ok || fs::rename(&tmp, &target).is_err() {
        let _ = fs::remove_file(&tmp);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip_and_version_check() {
        let mu = Partition::new(vec![2]).unwrap();
        let terms = vec![
            (Partition::new(vec![2]).unwrap(), QTPoly::one()),
            (Partition::new(vec![1, 1]).unwrap(), "1 + q".parse().unwrap()),
        ];
        let text = render(&mu, &terms);
        assert_eq!(parse(&mu, &text).unwrap(), terms);
        assert!(parse(&mu, &text.replace("v1", "v0")).is_none());
        assert!(parse(&Partition::new(vec![1, 1]).unwrap(), &text).is_none());
        assert!(parse(&mu, "garbage").is_none());
    }
}
