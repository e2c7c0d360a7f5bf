// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

#include "depthlab/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace depthlab {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

double parse_token(std::string_view tok, std::size_t line_no) {
    tok = trim(tok);
    if (tok.empty())
        throw ParseError("parse error at line " + std::to_string(line_no) + ": empty field");
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("parse error at line " + std::to_string(line_no) + ": bad number '" +
                         std::string(tok) + "'");
    if (!std::isfinite(v))
        throw ValueError("value error at line " + std::to_string(line_no) +
                         ": non-finite value '" + std::string(tok) + "'");
    return v;
}

}  // namespace

Dataset read_dataset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::vector<Point> points;
    std::size_t dim = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv = trim(line);
        if (sv.empty()) {
            // allow a trailing blank line only
            std::string rest;
            while (std::getline(in, rest))
                if (!trim(rest).empty())
                    throw ParseError("parse error at line " + std::to_string(line_no) +
                                     ": blank line inside data");
            break;
        }
        Point p;
        std::size_t start = 0;
        const std::string s(sv);
        while (true) {
            std::size_t comma = s.find(',', start);
            std::string_view tok(s.data() + start,
                                 (comma == std::string::npos ? s.size() : comma) - start);
            p.push_back(parse_token(tok, line_no));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (dim == 0)
            dim = p.size();
        else if (p.size() != dim)
            throw ParseError("parse error at line " + std::to_string(line_no) + ": expected " +
                             std::to_string(dim) + " fields, found " + std::to_string(p.size()));
        points.push_back(std::move(p));
    }
    if (points.empty()) throw EmptyInputError("dataset '" + path + "' is empty");
    return Dataset(points);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_dataset(const std::string& path, const Dataset& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    for (std::size_t i = 0; i < data.size(); ++i) {
        for (std::size_t j = 0; j < data.dim(); ++j) {
            if (j) out << ',';
            out << format_double(data.at(i, j));
        }
        out << '\n';
    }
    if (!out) throw ParseError("write failed for '" + path + "'");
}

CsvWriter::CsvWriter(std::string path, const std::string& canonical_cmd,
                     std::optional<std::uint64_t> seed)
    : path_(std::move(path)) {
    buffer_ = "# depthlab ";
    buffer_ += kVersion;
    buffer_ += " seed=";
    buffer_ += seed ? std::to_string(*seed) : "none";
    buffer_ += " cmd=";
    buffer_ += canonical_cmd;
    buffer_ += '\n';
}

void CsvWriter::header(const std::vector<std::string>& names) { row(names); }

void CsvWriter::row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) buffer_ += ',';
        buffer_ += fields[i];
    }
    buffer_ += '\n';
}

void CsvWriter::close() {
    if (closed_) return;
    closed_ = true;
    std::ofstream out(path_, std::ios::binary);
    if (!out) throw ParseError("cannot open '" + path_ + "' for writing");
    out.write(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
    if (!out) throw ParseError("write failed for '" + path_ + "'");
}

CsvWriter::~CsvWriter() {
    try {
        close();
    } catch (...) {
        // destructor must not throw; close() explicitly to observe errors
    }
}

}  // namespace depthlab
