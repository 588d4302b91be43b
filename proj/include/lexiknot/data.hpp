#pragma once

namespace lexiknot::embedded {

extern const char* const knots_csv;
extern const char* const bases_csv;
extern const char* const overrides_csv;

}  // namespace lexiknot::embedded
