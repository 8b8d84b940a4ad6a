#include "pistar/checkpoint.hpp"

#include <sstream>
#include <string>

#include "pistar/errors.hpp"

namespace pistar {

CheckpointLog::CheckpointLog(std::filesystem::path path) : path_(std::move(path)) {
    std::error_code ec;
    if (std::filesystem::exists(path_, ec)) {
        std::ifstream in(path_, std::ios::binary);
        if (!in) throw IoError("cannot read checkpoint " + path_.string());
        std::stringstream buf;
        buf << in.rdbuf();
        const std::string content = buf.str();
        in.close();

        std::size_t complete = content.rfind('\n');
        complete = (complete == std::string::npos) ? 0 : complete + 1;
        if (complete < content.size()) {
            std::filesystem::resize_file(path_, complete, ec);
            if (ec) throw IoError("cannot truncate torn checkpoint tail: " + ec.message());
            repaired_tail_ = true;
        }
        std::size_t start = 0;
        while (start < complete) {
            const std::size_t end = content.find('\n', start);
            loaded_.push_back(parse_json_line(std::string_view(content).substr(start, end - start)));
            start = end + 1;
        }
    }
    out_.open(path_, std::ios::binary | std::ios::app);
    if (!out_) throw IoError("cannot open checkpoint " + path_.string() + " for append");
}

void CheckpointLog::append(const VerificationRecord& r) {
    out_ << to_json_line(r) << '\n';
    out_.flush();
    if (!out_) throw IoError("write to checkpoint " + path_.string() + " failed");
}

}  // namespace pistar
