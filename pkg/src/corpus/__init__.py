from .models import Corpus, Record, RecordError, Source, first_author_surname
from .medline import parse_medline
from .isi import parse_isi
from .canonical import read_canonical, write_canonical, dumps_canonical
from .reader import InputFormat, detect_format, read_corpus
from .stats import STATS_COLUMNS, corpus_stats, stats_frame
