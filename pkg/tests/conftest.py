"""
Shared fixtures: the worked example records in both feed formats, and small
seeded synthetic corpora.
"""
import io

import pytest

from src.corpus.isi import parse_isi
from src.corpus.medline import parse_medline
from src.corpus.models import Corpus, Record, Source
from src.evaluation.synthetic import synthesize_corpus

EXAMPLE_TITLE = (
    "Hybrid Inhibitors of Phosphatidylinositol 3-Kinase (PI3K) and the "
    "Mammalian Target of Rapamycin (mTOR): Design, Synthesis, and Superior "
    "Antitumor Activity of Novel Wortmannin-Rapamycin Conjugates"
)

EXAMPLE_AUTHORS = (
    "Ayral-Kaloustian, S", "Gu, JX", "Lucas, J", "Cinque, M", "Gaydos, C", "Zask, A", "Chaudhary, I",
    "Wang, JY", "Di, L", "Young, M", "Ruppen, M", "Mansour, TS", "Gibbons, JJ", "Yu, K",
)

MEDLINE_TEXT = """\
PMID- 20166753
OWN - NLM
TI  - Structural analysis and functional implications of the negative mTORC1
      regulator REDD1.
AU  - Vega-Rubin-de-Celis, S
AU  - Abdallah, Z
FAU - Vega-Rubin-de-Celis, Silvia
DP  - 2010 Mar 2
TA  - Biochemistry
JT  - Biochemistry

PMID- 20136098
TI  - Hybrid Inhibitors of Phosphatidylinositol 3-Kinase (PI3K) and the
      Mammalian Target of Rapamycin (mTOR): Design, Synthesis, and Superior
      Antitumor Activity of Novel Wortmannin-Rapamycin Conjugates
AB  - Hybrid molecules combining two inhibitors were prepared.
AU  - Ayral-Kaloustian, S
AU  - Gu, JX
SO  - J Med Chem. 2010 Jan 14;53(1):452-9.
JT  - Journal of medicinal chemistry
DP  - 2010 Jan 14

PMID- 18774337
TI  - Cholera autoinducer CAI-1 production in Vibrio cholerae.
FAU - Scrascia, Maria
DP  - 2008
"""

ISI_TEXT = """\
FN Thomson Reuters Web of Science
VR 1.0
PT J
AU Ayral-Kaloustian, S
   Gu, JX
   Lucas, J
TI Hybrid Inhibitors of Phosphatidylinositol 3-Kinase (PI3K) and the
   Mammalian Target of Rapamycin (mTOR): Design, Synthesis, and Superior
   Antitumor Activity of Novel Wortmannin-Rapamycin Conjugates
SO JOURNAL OF MEDICINAL CHEMISTRY
PY 2010
UT WOS:000273520400045
ER

PT J
AU Vega-Rubin-de-Celis, S
TI Structural Analysis and Functional Implications of the Negative mTORCl
   Regulator REDD1
SO BIOCHEMISTRY
PY 2010
UT WOS:000275711400021
ER

EF
"""


def make_record(record_id, title=None, authors=("Doe, J",), abstract=None, journal="Some Journal", year=2010, source=Source.PM):
    return Record(
        id=record_id,
        source=source,
        authors=tuple(authors),
        title=title,
        journal=journal,
        year=year,
        abstract=abstract,
    )


@pytest.fixture
def example_record():
    """The worked example: first author, title, journal and date as published."""
    return Record(
        id="WOS:000273520400045",
        source=Source.WOS,
        authors=EXAMPLE_AUTHORS,
        title=EXAMPLE_TITLE,
        journal="JOURNAL OF MEDICINAL CHEMISTRY",
        year=2010,
    )


@pytest.fixture
def medline_corpus():
    return parse_medline(io.StringIO(MEDLINE_TEXT))


@pytest.fixture
def isi_corpus():
    return parse_isi(io.StringIO(ISI_TEXT))


@pytest.fixture
def medline_file(tmp_path):
    path = tmp_path / "pm.txt"
    path.write_text(MEDLINE_TEXT, encoding="utf-8")
    return path


@pytest.fixture
def isi_file(tmp_path):
    path = tmp_path / "wos.txt"
    path.write_text(ISI_TEXT, encoding="utf-8")
    return path


@pytest.fixture(scope="session")
def small_synthetic():
    """300 duplicate-free records, seed-pinned."""
    return synthesize_corpus(300, seed=7)


@pytest.fixture
def tiny_corpus():
    return Corpus(
        source=Source.PM,
        records=[
            make_record("1", "Mammalian target of rapamycin signalling", ("Alpha, A",)),
            make_record("2", "Cholera autoinducer production", ("Beta, B",)),
            make_record("3", "Structural analysis of REDD1", ("Gamma, C",)),
        ],
    )
