#pragma once

// Append-only, line-delimited checkpoint log of VerificationRecords.
//
// Opening an existing log loads every record and rejects malformed lines
// with CheckpointCorrupt. A final line without its terminating newline is a
// write torn by a kill; it is dropped and the file truncated back to the
// last complete record.

#include <filesystem>
#include <fstream>
#include <vector>

#include "pistar/record.hpp"

namespace pistar {

class CheckpointLog {
public:
    explicit CheckpointLog(std::filesystem::path path);

    const std::filesystem::path& path() const { return path_; }
    const std::vector<VerificationRecord>& loaded() const { return loaded_; }
    // True when a torn trailing line was discarded on open.
    bool repaired_tail() const { return repaired_tail_; }

    // Writes one line and flushes. Not thread safe; the sweep serializes.
    void append(const VerificationRecord& r);

private:
    std::filesystem::path path_;
    std::vector<VerificationRecord> loaded_;
    bool repaired_tail_ = false;
    std::ofstream out_;
};

}  // namespace pistar
