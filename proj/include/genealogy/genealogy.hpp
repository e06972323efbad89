#pragma once

#include "genealogy/block_matrix.hpp"
#include "genealogy/errors.hpp"
#include "genealogy/ingest.hpp"
#include "genealogy/matrix.hpp"
#include "genealogy/metrics.hpp"
#include "genealogy/report_io.hpp"
#include "genealogy/snapshot.hpp"
#include "genealogy/snapshot_io.hpp"
#include "genealogy/store.hpp"
#include "genealogy/synthetic.hpp"
#include "genealogy/types.hpp"
