"""核心数据模型与运行器"""
