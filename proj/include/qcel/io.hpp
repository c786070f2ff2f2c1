#pragma once

#include "qcel/sumrec.hpp"
#include "qcel/structset.hpp"
#include "qcel/oracle.hpp"

#include <json.hpp>

#include <string>

namespace qcel::io {

using nlohmann::json;

json loadJson(const std::string& path);
void saveJson(const std::string& path, const json& j);

// summand documents (schema: variables / substitutions / factors / tail)
Summand parseSummand(const json& doc);
Summand loadSummand(const std::string& path);

// linear form over symbol names, e.g. "i+j-1" or "Delta + 2*i"; unknown
// names must be resolvable through the table
LinForm parseLinFormText(const std::string& text, const VarTable& table);

// structure sets ({"tuples": [[...], ...]})
StructureSet loadStructureSet(const std::string& path, size_t nRec, size_t nSum);
json structureSetJson(const StructureSet& s);

// recurrences (self-contained: variable table + coefficients + rendering)
json kfreeJson(const KFreeRecurrence& rec);
KFreeRecurrence parseKFree(const json& j);
json sumRecJson(const SumRecurrence& rec);
SumRecurrence parseSumRec(const json& j);

json certificateJson(const TermwiseCertificate& c);
TermwiseCertificate parseCertificate(const json& j);

json gridReportJson(const oracle::GridReport& r);

// CLI substitution support: rebuild a summand after name=linform
// substitutions with an explicit rec/sum re-classification
Summand substituteSummand(const Summand& base,
                          const std::vector<std::pair<std::string, std::string>>& substitutions,
                          const std::vector<std::string>& recVars,
                          const std::vector<std::string>& sumVars);

} // namespace qcel::io
