#include "symlie/symlie.h"

#include <cstring>
#include <new>
#include <string>

#include "symlie/serialize.hpp"

struct symlie_field {
  symlie::Field value;
};

struct symlie_matrix {
  symlie::Matrix value;
};

struct symlie_seed {
  symlie::SeedPair value;
};

struct symlie_table {
  symlie::LieTable value;
};

namespace {

thread_local std::string last_error;

symlie_status status_of(symlie::ErrorCode code) {
  using symlie::ErrorCode;
  switch (code) {
    case ErrorCode::Parse: return SYMLIE_E_PARSE;
    case ErrorCode::InvalidArgument: return SYMLIE_E_INVALID_ARGUMENT;
    case ErrorCode::FieldMismatch: return SYMLIE_E_FIELD_MISMATCH;
    case ErrorCode::DimensionMismatch: return SYMLIE_E_DIMENSION_MISMATCH;
    case ErrorCode::Singular: return SYMLIE_E_SINGULAR;
    case ErrorCode::NotAnEigenvector: return SYMLIE_E_NOT_AN_EIGENVECTOR;
    case ErrorCode::EigenvaluesNotInField: return SYMLIE_E_EIGENVALUES_NOT_IN_FIELD;
    case ErrorCode::BudgetExceeded: return SYMLIE_E_BUDGET_EXCEEDED;
  }
  return SYMLIE_E_INTERNAL;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
symlie_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return SYMLIE_OK;
  } catch (const symlie::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SYMLIE_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SYMLIE_E_INTERNAL;
  }
}

template <typename T>
void require(const T* p, const char* what) {
  if (p == nullptr) throw symlie::Error(symlie::ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const symlie::Json& j, char** out) {
  require(out, "output pointer");
  *out = dup_string(j.dump(2));
}

symlie::Vec column_vector(const symlie::Matrix& m) {
  if (m.cols() != 1) throw symlie::Error(symlie::ErrorCode::DimensionMismatch, "expected a column vector");
  return m.col(0);
}

}  // namespace

extern "C" {

const char* symlie_version(void) { return "0.1.0"; }

const char* symlie_status_name(symlie_status status) {
  switch (status) {
    case SYMLIE_OK: return "OK";
    case SYMLIE_E_PARSE: return "Parse";
    case SYMLIE_E_INVALID_ARGUMENT: return "InvalidArgument";
    case SYMLIE_E_FIELD_MISMATCH: return "FieldMismatch";
    case SYMLIE_E_DIMENSION_MISMATCH: return "DimensionMismatch";
    case SYMLIE_E_SINGULAR: return "Singular";
    case SYMLIE_E_NOT_AN_EIGENVECTOR: return "NotAnEigenvector";
    case SYMLIE_E_EIGENVALUES_NOT_IN_FIELD: return "EigenvaluesNotInField";
    case SYMLIE_E_BUDGET_EXCEEDED: return "BudgetExceeded";
    case SYMLIE_E_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* symlie_last_error(void) { return last_error.c_str(); }

void symlie_string_free(char* s) { std::free(s); }

symlie_status symlie_field_parse(const char* tag, symlie_field** out) {
  return guarded([&] {
    require(tag, "tag");
    require(out, "output pointer");
    *out = new symlie_field{symlie::Field::parse(tag)};
  });
}

void symlie_field_free(symlie_field* field) { delete field; }

symlie_status symlie_matrix_parse(const symlie_field* field, const char* text, symlie_matrix** out) {
  return guarded([&] {
    require(field, "field");
    require(text, "text");
    require(out, "output pointer");
    *out = new symlie_matrix{symlie::parse_matrix(field->value, text)};
  });
}

symlie_status symlie_vector_parse(const symlie_field* field, const char* text, symlie_matrix** out) {
  return guarded([&] {
    require(field, "field");
    require(text, "text");
    require(out, "output pointer");
    symlie::Vec v = symlie::parse_vector(field->value, text);
    *out = new symlie_matrix{symlie::Matrix::from_columns(field->value, {v})};
  });
}

symlie_status symlie_matrix_to_json(const symlie_matrix* m, char** out_json) {
  return guarded([&] {
    require(m, "matrix");
    emit(symlie::to_json(m->value), out_json);
  });
}

void symlie_matrix_free(symlie_matrix* m) { delete m; }

symlie_status symlie_seed_create(const symlie_matrix* a, const symlie_matrix* w, symlie_seed** out) {
  return guarded([&] {
    require(a, "matrix");
    require(w, "eigenvector");
    require(out, "output pointer");
    *out = new symlie_seed{symlie::validate_seed(a->value, column_vector(w->value))};
  });
}

symlie_status symlie_seed_lambda(const symlie_seed* seed, char** out_scalar) {
  return guarded([&] {
    require(seed, "seed");
    require(out_scalar, "output pointer");
    *out_scalar = dup_string(seed->value.lambda().to_string());
  });
}

int symlie_seed_is_degenerate(const symlie_seed* seed) { return seed != nullptr && seed->value.degenerate() ? 1 : 0; }

void symlie_seed_free(symlie_seed* seed) { delete seed; }

symlie_status symlie_table_construct(const symlie_seed* seed, unsigned degree, symlie_table** out) {
  return guarded([&] {
    require(seed, "seed");
    require(out, "output pointer");
    if (degree == 0) throw symlie::Error(symlie::ErrorCode::InvalidArgument, "degree must be at least 1");
    *out = new symlie_table{symlie::structure_constants(seed->value, degree)};
  });
}

symlie_status symlie_table_graded(const symlie_seed* seed, unsigned max_degree, symlie_table** out) {
  return guarded([&] {
    require(seed, "seed");
    require(out, "output pointer");
    *out = new symlie_table{symlie::graded_table(seed->value, max_degree)};
  });
}

symlie_status symlie_table_from_json(const char* json, symlie_table** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "output pointer");
    symlie::Json parsed;
    try {
      parsed = symlie::Json::parse(json);
    } catch (const nlohmann::json::exception& e) {
      throw symlie::Error(symlie::ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
    }
    *out = new symlie_table{symlie::table_from_json(parsed)};
  });
}

symlie_status symlie_table_to_json(const symlie_table* table, char** out_json) {
  return guarded([&] {
    require(table, "table");
    emit(symlie::to_json(table->value), out_json);
  });
}

size_t symlie_table_dim(const symlie_table* table) { return table ? table->value.dim() : 0; }

void symlie_table_free(symlie_table* table) { delete table; }

symlie_status symlie_table_analyze(const symlie_table* table, char** out_json) {
  return guarded([&] {
    require(table, "table");
    emit(symlie::analysis_json(table->value), out_json);
  });
}

symlie_status symlie_table_fingerprint(const symlie_table* table, char** out_json) {
  return guarded([&] {
    require(table, "table");
    emit(symlie::to_json(symlie::fingerprint(table->value)), out_json);
  });
}

symlie_status symlie_verify_hom(const symlie_table* src, const symlie_table* dst, const symlie_matrix* map,
                                char** out_json) {
  return guarded([&] {
    require(src, "source table");
    require(dst, "target table");
    require(map, "map");
    emit(symlie::to_json(symlie::verify_hom(src->value, dst->value, map->value)), out_json);
  });
}

symlie_status symlie_brute_force_iso(const symlie_table* t1, const symlie_table* t2, uint64_t budget, char** out_json) {
  return guarded([&] {
    require(t1, "first table");
    require(t2, "second table");
    auto witness = symlie::brute_force_iso(t1->value, t2->value, budget == 0 ? symlie::kDefaultIsoBudget : budget);
    symlie::Json out;
    out["isomorphic"] = witness.has_value();
    out["witness"] = witness ? symlie::to_json(*witness) : symlie::Json(nullptr);
    emit(out, out_json);
  });
}

symlie_status symlie_conjugated_iso(const symlie_seed* seed, const symlie_matrix* t, unsigned degree, char** out_json) {
  return guarded([&] {
    require(seed, "seed");
    require(t, "conjugating matrix");
    auto result = symlie::conjugated_iso(seed->value, t->value, degree);
    symlie::Json out;
    out["A"] = symlie::rows_json(result.seed.matrix());
    out["w"] = symlie::to_json(result.seed.w());
    out["lambda"] = result.seed.lambda().to_string();
    out["witness"] = symlie::to_json(result.witness);
    emit(out, out_json);
  });
}

symlie_status symlie_classify(const symlie_seed* seed, unsigned degree, char** out_json) {
  return guarded([&] {
    require(seed, "seed");
    emit(symlie::to_json(symlie::classify(seed->value, degree)), out_json);
  });
}

symlie_status symlie_orbits(unsigned n, uint64_t p, int include_zero_w, uint64_t budget, char** out_json) {
  return guarded([&] {
    auto report = symlie::gl_orbits(n, p, include_zero_w != 0, budget == 0 ? symlie::kDefaultEnumerationBudget : budget);
    emit(symlie::to_json(report), out_json);
  });
}

symlie_status symlie_iso_class_count(unsigned n, uint64_t p, unsigned degree, int include_zero_w, uint64_t budget,
                                     uint64_t iso_budget, char** out_json) {
  return guarded([&] {
    if (degree == 0) throw symlie::Error(symlie::ErrorCode::InvalidArgument, "degree must be at least 1");
    auto report = symlie::iso_class_count(n, p, degree, include_zero_w != 0,
                                          budget == 0 ? symlie::kDefaultEnumerationBudget : budget,
                                          iso_budget == 0 ? symlie::kDefaultIsoBudget : iso_budget);
    emit(symlie::to_json(report), out_json);
  });
}

symlie_status symlie_eigendirections(const symlie_matrix* a, char** out_json) {
  return guarded([&] {
    require(a, "matrix");
    auto dirs = symlie::eigendirections(a->value);
    symlie::Json list = symlie::Json::array();
    for (const auto& v : dirs) list.push_back(symlie::to_json(v));
    symlie::Json out;
    out["field"] = a->value.field().tag();
    out["count"] = dirs.size();
    out["directions"] = list;
    emit(out, out_json);
  });
}

}  // extern "C"
