#include "typecalc/render.hpp"

#include <sstream>

#include "json.hpp"
#include "typecalc/io.hpp"

namespace typecalc {

RenderFormat render_format_from_string(const std::string& name) {
  if (name == "text") return RenderFormat::text;
  if (name == "csv") return RenderFormat::csv;
  if (name == "json") return RenderFormat::json;
  if (name == "latex") return RenderFormat::latex;
  throw InvalidInput("unknown format \"" + name + "\" (expected text, csv, json or latex)");
}

namespace {

using nlohmann::json;

std::vector<std::string> entry_strings(const AutType& t) {
  std::vector<std::string> out;
  for (const auto& e : t.entries()) out.push_back(frac_str(e));
  return out;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

struct TableRowView {
  std::string index;
  std::string n;
  std::string type;
  std::string last;  // weight or note
  std::string extra;
};

std::string render_text_table(const std::vector<std::string>& headers,
                              const std::vector<TableRowView>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& h : headers) widths.push_back(h.size());
  const auto consider = [&](const TableRowView& r) {
    const std::string* cells[] = {&r.index, &r.n, &r.type, &r.last, &r.extra};
    for (std::size_t i = 0; i < widths.size(); ++i)
      widths[i] = std::max(widths[i], cells[i]->size());
  };
  for (const auto& r : rows) consider(r);
  std::ostringstream out;
  for (std::size_t i = 0; i < headers.size(); ++i)
    out << (i ? "  " : "") << pad(headers[i], widths[i]);
  out << "\n";
  for (const auto& r : rows) {
    const std::string* cells[] = {&r.index, &r.n, &r.type, &r.last, &r.extra};
    for (std::size_t i = 0; i < headers.size(); ++i)
      out << (i ? "  " : "") << pad(*cells[i], widths[i]);
    out << "\n";
  }
  return out.str();
}

std::string latex_escape_note(const NoteTag& note) {
  if (note.kind == NoteTag::Kind::power)
    return "$g^{" + std::to_string(note.k) + "}\\to\\#" + std::to_string(note.target) + "$";
  return note.str();
}

}  // namespace

std::string render_primitives(const PrimitiveCatalogue& catalogue, RenderFormat format) {
  switch (format) {
    case RenderFormat::text: {
      std::vector<TableRowView> rows;
      for (const auto& r : catalogue.rows)
        rows.push_back({std::to_string(r.index), std::to_string(r.n), type_str(r.prim.base),
                        r.wt.str(), ""});
      return render_text_table({"#", "n", "type", "weight"}, rows);
    }
    case RenderFormat::csv: {
      std::string out = "index,n,entries,weight,note\n";
      for (const auto& r : catalogue.rows)
        out += std::to_string(r.index) + "," + std::to_string(r.n) + "," +
               csv_quote(join(entry_strings(r.prim.base), ";")) + "," + r.wt.str() + ",\"\"\n";
      return out;
    }
    case RenderFormat::json: {
      json rows = json::array();
      for (const auto& r : catalogue.rows)
        rows.push_back({{"index", r.index},
                        {"n", r.n},
                        {"entries", entry_strings(r.prim.base)},
                        {"weight", r.wt.str()},
                        {"note", ""}});
      return json{{"rows", rows}}.dump(2) + "\n";
    }
    case RenderFormat::latex: {
      std::ostringstream out;
      out << "\\begin{tabular}{|l|c|c|c|}\n\\hline\n"
          << "\\# & $n$ & type & weight\\\\\\hline\n";
      i64 last_n = 0;
      for (const auto& r : catalogue.rows) {
        out << r.index << " & " << (r.n == last_n ? "" : std::to_string(r.n)) << " & $"
            << type_str(r.prim.base) << "$ & $" << r.wt.str() << "$\\\\\\hline\n";
        last_n = r.n;
      }
      out << "\\end{tabular}\n";
      return out.str();
    }
  }
  throw InvalidInput("unknown render format");
}

std::string render_age_one(const AgeOneCatalogue& catalogue, RenderFormat format) {
  const auto strategies_str = [](const AgeOneRow& r) {
    std::vector<std::string> parts;
    for (const auto& s : r.applicable) parts.push_back(s.str());
    return join(parts, "; ");
  };
  switch (format) {
    case RenderFormat::text: {
      std::vector<TableRowView> rows;
      for (const auto& r : catalogue.rows)
        rows.push_back({std::to_string(r.index), std::to_string(r.n), type_str(r.type),
                        r.note.str(), strategies_str(r)});
      return render_text_table({"#", "n", "type", "note", "applicable"}, rows);
    }
    case RenderFormat::csv: {
      std::string out = "index,n,entries,weight,note\n";
      for (const auto& r : catalogue.rows)
        out += std::to_string(r.index) + "," + std::to_string(r.n) + "," +
               csv_quote(join(entry_strings(r.type), ";")) + ",1," + csv_quote(r.note.str()) +
               "\n";
      return out;
    }
    case RenderFormat::json: {
      json rows = json::array();
      for (const auto& r : catalogue.rows) {
        json applicable = json::array();
        for (const auto& s : r.applicable) applicable.push_back(s.str());
        rows.push_back({{"index", r.index},
                        {"n", r.n},
                        {"entries", entry_strings(r.type)},
                        {"weight", weight(r.type).str()},
                        {"note", r.note.str()},
                        {"display", r.display},
                        {"applicable", applicable}});
      }
      return json{{"rows", rows}}.dump(2) + "\n";
    }
    case RenderFormat::latex: {
      std::ostringstream out;
      out << "\\begin{tabular}{|c|c|c|c|}\n\\hline\n"
          << "\\# & $n$ & types & notes\\\\\\hline\n";
      i64 last_n = 0;
      for (const auto& r : catalogue.rows) {
        out << r.index << " & " << (r.n == last_n ? "" : std::to_string(r.n)) << " & $"
            << r.display << "$ & " << latex_escape_note(r.note) << "\\\\\\hline\n";
        last_n = r.n;
      }
      out << "\\end{tabular}\n";
      return out.str();
    }
  }
  throw InvalidInput("unknown render format");
}

namespace {

json report_to_json(const VerificationReport& rep) {
  json mismatches = json::array();
  for (const auto& m : rep.mismatches)
    mismatches.push_back({{"row", m.row}, {"expected", m.expected}, {"found", m.found}});
  return {{"subject", rep.subject},
          {"status", rep.passed() ? "pass" : "fail"},
          {"expected_count", rep.expected_count},
          {"found_count", rep.found_count},
          {"mismatches", mismatches},
          {"notes", rep.notes}};
}

}  // namespace

std::string render_reports(const std::vector<VerificationReport>& reports, RenderFormat format) {
  switch (format) {
    case RenderFormat::text: {
      std::ostringstream out;
      for (const auto& rep : reports) {
        out << "[" << (rep.passed() ? "PASS" : "FAIL") << "] " << rep.subject << " (expected "
            << rep.expected_count << ", found " << rep.found_count << ")\n";
        for (const auto& m : rep.mismatches)
          out << "  row " << m.row << ": expected " << m.expected << "; found " << m.found << "\n";
        for (const auto& n : rep.notes) out << "  note: " << n << "\n";
      }
      return out.str();
    }
    case RenderFormat::csv: {
      std::string out = "subject,status,expected_count,found_count,mismatches\n";
      for (const auto& rep : reports)
        out += rep.subject + "," + (rep.passed() ? "pass" : "fail") + "," +
               std::to_string(rep.expected_count) + "," + std::to_string(rep.found_count) + "," +
               std::to_string(rep.mismatches.size()) + "\n";
      return out;
    }
    case RenderFormat::json: {
      json arr = json::array();
      for (const auto& rep : reports) arr.push_back(report_to_json(rep));
      return json{{"reports", arr}}.dump(2) + "\n";
    }
    case RenderFormat::latex: {
      std::ostringstream out;
      out << "\\begin{tabular}{|l|c|c|c|}\n\\hline\n"
          << "subject & status & expected & found\\\\\\hline\n";
      for (const auto& rep : reports)
        out << rep.subject << " & " << (rep.passed() ? "pass" : "fail") << " & "
            << rep.expected_count << " & " << rep.found_count << "\\\\\\hline\n";
      out << "\\end{tabular}\n";
      return out.str();
    }
  }
  throw InvalidInput("unknown render format");
}

}  // namespace typecalc
