"""
Assembling a spectrum from a data file
======================================

Disc(Gamma\\L) comes in as JSON, the spectrum goes out as JSON.  The same
thing from the shell:

    spectral-transfer assemble --case group_manifold:sl2r --input tests/data/sl2r_disc.json
"""

from pathlib import Path

from spectral_transfer.spectra import assemble_spectrum, emit_spectrum, load_disc_data

data = Path(__file__).resolve().parent.parent / "tests" / "data" / "sl2r_disc.json"
doc = load_disc_data(data.read_bytes())
print(f"{len(doc)} entries for {doc.case_id}")

for filt in ("I", "II"):
    print(f"-- type {filt}")
    for e in assemble_spectrum(doc, doc.case_id, filt):
        print(f"   {e.source_label:18s} lambda={e.lam}  t={e.t_lambda}")

# canonical output: byte-stable, so re-emitting is a no-op
out = emit_spectrum(assemble_spectrum(doc, doc.case_id), doc.case_id)
print(out.decode()[:200], "...")
