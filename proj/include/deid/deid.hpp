#pragma once

// Umbrella header.

#include "deid/core.hpp"
#include "deid/formats/conll.hpp"
#include "deid/formats/entities_json.hpp"
#include "deid/formats/textgrid.hpp"
#include "deid/formats/wav.hpp"
#include "deid/labels.hpp"
#include "deid/metrics/delta.hpp"
#include "deid/metrics/fa.hpp"
#include "deid/metrics/ner.hpp"
#include "deid/metrics/nte.hpp"
#include "deid/metrics/report.hpp"
#include "deid/prep/brat.hpp"
#include "deid/prep/folds.hpp"
#include "deid/prep/normalize.hpp"
#include "deid/prep/remap.hpp"
#include "deid/prep/sentences.hpp"
#include "deid/prep/tokenize.hpp"
#include "deid/redaction.hpp"
#include "deid/tagging/bio.hpp"
#include "deid/tagging/gazetteer.hpp"
#include "deid/tagging/protocol.hpp"
#include "deid/tagging/tagger.hpp"
#include "deid/tagging/threshold.hpp"
#include "deid/timealign.hpp"
