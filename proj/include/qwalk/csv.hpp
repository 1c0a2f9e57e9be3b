#pragma once

// Minimal deterministic CSV writing: one header line, comma separation,
// '.' decimal point, doubles at 17 significant digits so values round-trip
// exactly. Identical inputs produce identical bytes.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwalk {

inline std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

class CsvWriter {
public:
    explicit CsvWriter(const std::filesystem::path& path) : path_(path) {
        out_.open(path, std::ios::binary | std::ios::trunc);
        if (!out_)
            throw std::runtime_error("CsvWriter: cannot open " + path.string());
    }

    void header(const std::vector<std::string>& columns) {
        write_fields(columns);
        n_columns_ = columns.size();
    }

    class Row {
    public:
        explicit Row(CsvWriter& writer) : writer_(writer) {}
        Row& col(double value) { return raw(format_double(value)); }
        Row& col(int value) { return raw(std::to_string(value)); }
        Row& col(long long value) { return raw(std::to_string(value)); }
        Row& col(std::size_t value) { return raw(std::to_string(value)); }
        Row& col(const std::string& value) { return raw(value); }
        ~Row() { writer_.write_fields(fields_); }

        Row(const Row&) = delete;
        Row& operator=(const Row&) = delete;

    private:
        Row& raw(std::string text) {
            fields_.push_back(std::move(text));
            return *this;
        }
        CsvWriter& writer_;
        std::vector<std::string> fields_;
    };

    Row row() { return Row(*this); }

    const std::filesystem::path& path() const { return path_; }

    void close() {
        out_.close();
        if (!out_)
            throw std::runtime_error("CsvWriter: write failure on " + path_.string());
    }

private:
    friend class Row;

    void write_fields(const std::vector<std::string>& fields) {
        if (n_columns_ != 0 && fields.size() != n_columns_)
            throw std::logic_error("CsvWriter: row width differs from header on " +
                                   path_.string());
        std::string line;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) line += ',';
            line += fields[i];
        }
        line += '\n';
        out_ << line;
        if (!out_)
            throw std::runtime_error("CsvWriter: write failure on " + path_.string());
    }

    std::filesystem::path path_;
    std::ofstream out_;
    std::size_t n_columns_ = 0;
};

}  // namespace qwalk
