#pragma once

#include <string>

#include "json.hpp"

#include "upsilon/audit.hpp"
#include "upsilon/search.hpp"
#include "upsilon/tiling.hpp"

namespace upsilon {

// Reports come in two renderings: "key: value" text and a JSON tree.

nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const AuditReport& r);
nlohmann::json to_json(const NonexistenceCertificate& c);
nlohmann::json to_json(const SearchResult& r);

std::string to_text(const VerificationReport& r);
std::string to_text(const AuditReport& r);
std::string to_text(const NonexistenceCertificate& c);
std::string to_text(const SearchResult& r);

}  // namespace upsilon
