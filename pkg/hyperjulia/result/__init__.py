"""结果输出: json、csv、text"""
