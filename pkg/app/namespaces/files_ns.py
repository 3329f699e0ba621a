from argparse import Namespace

files_ns = Namespace(
    OUTPUT_FOLDER="out",
    REPORTS_FOLDER="REPORTS",
    TABLES_FOLDER="TABLES",
    RENDERS_FOLDER="RENDERS",
    DUMPS_FOLDER="DUMPS",
    SUMMARY="SUMMARY.csv",
    REPORT_EXT=".json",
    TABLE_EXT=".csv",
    DUMP_EXT=".peano",
    SVG_EXT=".svg",
    ENV_PREFIX="MTL_",
    CONFIG_SECTION="mtl",
    SCHEMA_VERSION=1,
    FLOAT_FORMAT="%.17g",
    PEANO_MAGIC=b"PEANO1",
)

exit_ns = Namespace(
    PASS=0,
    ERROR=1,
    FAIL=2,
)
